#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bidgame/gamefile.hpp"
#include "bidgame/oracle.hpp"
#include "bidgame/sim.hpp"
#include "bidgame/strategies.hpp"
#include "bidgame/turnbased.hpp"

namespace py = pybind11;
using namespace bidgame;

namespace {

std::map<std::string, std::map<std::string, std::string>> energy_dict(const Arena& a,
                                                                      const EnergyTable& t) {
  std::map<std::string, std::map<std::string, std::string>> out;
  for (int v = 0; v < a.num_vertices(); ++v)
    for (Ord b = 0; b <= a.max_budget(); ++b)
      out[a.name(v)][format_budget(b)] = format_energy(t.at(v, b));
  return out;
}

std::map<std::string, std::string> threshold_dict(const Arena& a, const ThresholdMap& T) {
  std::map<std::string, std::string> out;
  for (int v = 0; v < a.num_vertices(); ++v) out[a.name(v)] = format_threshold(T, v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_bidgame, m) {
  m.doc() = "discrete-bidding energy and mean-payoff game solver";

  py::class_<Arena>(m, "Arena")
      .def(py::init<long long>(), py::arg("total_budget"))
      .def("add_vertex", py::overload_cast<const std::string&>(&Arena::add_vertex))
      .def("add_edge",
           py::overload_cast<const std::string&, const std::string&, long long>(&Arena::add_edge))
      .def("validate", &Arena::validate)
      .def_property_readonly("num_vertices", &Arena::num_vertices)
      .def_property_readonly("total_budget", &Arena::k)
      .def_property_readonly("max_weight", &Arena::max_weight)
      .def_property_readonly("vertices", &Arena::names);

  m.def("parse_game", &parse_game);
  m.def("serialize_game", &serialize_game);

  m.def("budget_add",
        [](const std::string& x, const std::string& y) {
          return format_budget(parse_budget(x) + parse_budget(y));
        });
  m.def("budget_sub", [](const std::string& x, const std::string& y) {
    return format_budget(ord_sub(parse_budget(x), parse_budget(y)));
  });
  m.def("trump", [](const std::string& budget, const std::string& bid) {
    return format_budget(trump(parse_budget(budget), parse_budget(bid)));
  });
  m.def("cons_budget", [](long long k, const std::string& b) {
    return format_budget(cons_budget(k, parse_budget(b)));
  });

  m.def("solve_energy", [](const Arena& a) { return energy_dict(a, solve_energy(a).energy); });

  m.def("thresholds", [](const Arena& a) {
    FixedPointResult fp = solve_energy(a);
    return threshold_dict(a, thresholds(a, fp));
  });

  m.def("check_average", [](const Arena& a) {
    FixedPointResult fp = solve_energy(a);
    ThresholdMap T = thresholds(a, fp);
    return check_average(a, T).ok && check_average(a, complement(T)).ok;
  });

  m.def("certify", [](const Arena& a, const std::map<std::string, std::string>& t) {
    ThresholdMap T;
    T.k = a.k();
    T.values.assign(a.num_vertices(), T.top());
    for (const auto& [name, val] : t)
      T.values[a.index_of(name)] = val == "none" ? T.top() : parse_budget(val);
    CertifyResult r = certify(a, T);
    return py::make_tuple(r.accepted, r.witness);
  });

  m.def("oracle_thresholds", [](const Arena& a) {
    return threshold_dict(a, oracle_threshold(a));
  });

  m.def("reduce_mean_payoff", &reduce_mean_payoff, py::arg("arena"), py::arg("p"), py::arg("q"));
}
