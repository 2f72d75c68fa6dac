#include "bidgame/sim.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace bidgame {

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

PlayTrace run_play(const Arena& arena, const Configuration& init, long long energy, Strategy& pres,
                   Strategy& cons, long long max_steps) {
  PlayTrace trace;
  trace.initial_energy = energy;

  std::map<std::tuple<int, Ord, std::string, std::string>, long long> seen;
  Configuration cfg = init;
  long long e = energy;

  for (long long step = 0; step < max_steps; ++step) {
    auto key = std::make_tuple(cfg.vertex, cfg.pres_budget, pres.fingerprint(), cons.fingerprint());
    auto [it, inserted] = seen.try_emplace(key, step);
    if (!inserted) {
      long long sum = 0;
      for (long long i = it->second; i < step; ++i) sum += trace.steps[i].weight;
      if (sum >= 0) {
        trace.outcome = Outcome::CycleDetected;
        trace.cycle_start = it->second;
        trace.cycle_period = step - it->second;
        return trace;
      }
      // A draining cycle: the play is periodic but the energy keeps falling,
      // so keep going until it crosses zero.
      it->second = step;
    }

    StepRecord rec;
    rec.cfg = cfg;
    try {
      rec.pres = pres.decide(cfg);
      rec.cons = cons.decide(cfg);
    } catch (const strategy_undefined_error& err) {
      throw strategy_undefined_error(std::string(err.what()) + " (vertex " +
                                     arena.name(cfg.vertex) + ", budget " +
                                     format_budget(cfg.pres_budget) + ")");
    }
    StepResult res = resolve_bidding(arena, cfg, rec.pres, rec.cons);
    rec.winner = res.winner;
    rec.weight = res.weight;
    rec.next = res.next;
    e += res.weight;
    rec.energy_after = e;
    trace.steps.push_back(rec);
    pres.observe(rec);
    cons.observe(rec);

    if (e < 0) {
      trace.outcome = Outcome::ConsWin;
      return trace;
    }
    cfg = res.next;
  }
  trace.outcome = Outcome::PresSurvived;
  return trace;
}

Rational mean_payoff_of(const PlayTrace& trace) {
  if (trace.outcome != Outcome::CycleDetected)
    throw std::logic_error("mean payoff requested for a play without a detected cycle");
  long long sum = 0;
  for (long long i = trace.cycle_start; i < trace.cycle_start + trace.cycle_period; ++i)
    sum += trace.steps[i].weight;
  return Rational::make(sum, trace.cycle_period);
}

Arena reduce_mean_payoff(const Arena& arena, long long p, long long q) {
  if (q < 1) throw arena_error("target denominator must be positive");
  Arena shifted(arena.k());
  for (const std::string& name : arena.names()) shifted.add_vertex(name);
  for (int v = 0; v < arena.num_vertices(); ++v)
    for (const Edge& e : arena.neighbors(v)) shifted.add_edge(v, e.to, q * e.weight - p);
  return shifted;
}

}  // namespace bidgame
