#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "bidgame/gamefile.hpp"
#include "bidgame/oracle.hpp"
#include "bidgame/sim.hpp"
#include "bidgame/strategies.hpp"
#include "bidgame/turnbased.hpp"

namespace {

using namespace bidgame;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arena load_game(const std::string& path) { return parse_game(read_file(path)); }

Configuration parse_init(const Arena& arena, const std::string& text) {
  auto pos = text.rfind(':');
  if (pos == std::string::npos) throw parse_error("expected VERTEX:BUDGET, got " + text);
  Configuration cfg;
  cfg.vertex = arena.index_of(text.substr(0, pos));
  cfg.pres_budget = parse_budget(text.substr(pos + 1));
  if (cfg.pres_budget > arena.max_budget())
    throw parse_error("budget exceeds total budget: " + text.substr(pos + 1));
  return cfg;
}

std::pair<long long, long long> parse_target(const std::string& text) {
  auto pos = text.find('/');
  long long p = std::stoll(pos == std::string::npos ? text : text.substr(0, pos));
  long long q = pos == std::string::npos ? 1 : std::stoll(text.substr(pos + 1));
  if (q < 1) throw parse_error("target denominator must be positive");
  return {p, q};
}

int cmd_solve(const std::string& game_path) {
  Arena arena = load_game(game_path);
  FixedPointResult fp = solve_energy(arena);
  for (int v = 0; v < arena.num_vertices(); ++v)
    for (Ord b = 0; b <= arena.max_budget(); ++b)
      std::cout << arena.name(v) << " " << format_budget(b) << " "
                << format_energy(fp.energy.at(v, b)) << "\n";
  return 0;
}

int cmd_thresholds(const std::string& game_path, bool as_json) {
  Arena arena = load_game(game_path);
  FixedPointResult fp = solve_energy(arena);
  ThresholdMap T = thresholds(arena, fp);
  ThresholdMap Tp = complement(T);
  if (as_json) {
    std::cout << serialize_thresholds(T, arena);
    return 0;
  }
  for (int v = 0; v < arena.num_vertices(); ++v)
    std::cout << "Th(" << arena.name(v) << ") = " << format_threshold(T, v) << "\n";
  for (int v = 0; v < arena.num_vertices(); ++v)
    std::cout << "Th'(" << arena.name(v) << ") = " << format_threshold(Tp, v) << "\n";
  bool ok = check_average(arena, T).ok && check_average(arena, Tp).ok;
  std::cout << "average-property: " << (ok ? "OK" : "VIOLATED") << "\n";
  return 0;
}

int cmd_strategy(const std::string& game_path, const std::string& player) {
  Arena arena = load_game(game_path);
  FixedPointResult fp = solve_energy(arena);
  ThresholdMap T = thresholds(arena, fp);
  ThresholdMap owner_T = player == "pres" ? T : complement(T);
  Side side = player == "pres" ? Side::Pres : Side::Cons;
  TurnBasedGame tbg = build_turn_based(arena, owner_T, side);
  std::vector<long long> sol = solve_turn_based(tbg);
  PositionalStrategy strat = extract_positional(arena, owner_T, tbg, sol);

  std::cout << "vertex budget bid target\n";
  for (int v = 0; v < arena.num_vertices(); ++v) {
    if (owner_T.is_top(v)) continue;
    for (int i = 0; i < 2; ++i) {
      Ord own = owner_T.at(v) + i;
      if (own > arena.max_budget()) continue;
      Ord pres_b = side == Side::Pres ? own : cons_budget(arena.k(), own);
      if (!strat.defined(v, pres_b)) continue;
      Action a = strat.decide(Configuration{v, pres_b});
      std::cout << arena.name(v) << " " << format_budget(own) << " " << format_budget(a.bid) << " "
                << arena.name(a.target) << "\n";
    }
  }
  return 0;
}

int cmd_simulate(const std::string& game_path, const std::string& init_text, long long energy,
                 const std::string& pres_name, const std::string& cons_name, long long steps,
                 unsigned seed) {
  Arena arena = load_game(game_path);
  Configuration init = parse_init(arena, init_text);
  FixedPointResult fp = solve_energy(arena);
  ThresholdMap T = thresholds(arena, fp);
  PositionalStrategy vi = sigma_vi(arena, fp);

  std::unique_ptr<Strategy> pres;
  if (pres_name == "vi") {
    pres = std::make_unique<PositionalStrategy>(vi);
  } else if (pres_name == "agn") {
    pres = std::make_unique<PositionalStrategy>(sigma_agn(arena, fp, T, vi));
  } else if (pres_name == "tb") {
    TurnBasedGame tbg = build_turn_based(arena, T, Side::Pres);
    pres = std::make_unique<PositionalStrategy>(
        extract_positional(arena, T, tbg, solve_turn_based(tbg)));
  } else {
    throw parse_error("unknown pres strategy: " + pres_name + " (expected vi, agn, tb)");
  }

  std::unique_ptr<Strategy> cons;
  if (cons_name == "vi") {
    if (is_inf(fp.energy.at(init.vertex, init.pres_budget)) ||
        energy < fp.energy.at(init.vertex, init.pres_budget))
      cons = std::make_unique<TauCycleSkip>(arena, fp, init, energy);
    else
      cons = std::make_unique<PositionalStrategy>(cons_best_response(arena, fp, vi));
  } else if (cons_name == "cycle") {
    cons = std::make_unique<TauCycleSkip>(arena, fp, init, energy);
  } else if (cons_name == "agn") {
    cons = std::make_unique<TauAgn>(arena, complement(T));
  } else if (cons_name == "random") {
    cons = std::make_unique<RandomCons>(arena, arena.k(), seed);
  } else {
    throw parse_error("unknown cons strategy: " + cons_name +
                      " (expected vi, cycle, agn, random)");
  }

  if (steps <= 0) steps = default_max_steps(arena);
  PlayTrace trace = run_play(arena, init, energy, *pres, *cons, steps);

  std::cout << "step vertex budget pres_bid cons_bid winner weight energy\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& s = trace.steps[i];
    std::cout << i << " " << arena.name(s.cfg.vertex) << " " << format_budget(s.cfg.pres_budget)
              << " " << format_budget(s.pres.bid) << " " << format_budget(s.cons.bid) << " "
              << to_string(s.winner) << " " << s.weight << " " << s.energy_after << "\n";
  }
  switch (trace.outcome) {
    case Outcome::ConsWin:
      std::cout << "outcome: cons-win at step " << trace.steps.size() - 1 << "\n";
      break;
    case Outcome::PresSurvived: {
      std::cout << "outcome: pres-survived after " << trace.steps.size() << " steps\n";
      if (!trace.steps.empty()) {
        long long sum = 0;
        for (const StepRecord& s : trace.steps) sum += s.weight;
        std::cout << "mean-payoff (approximate): "
                  << to_string(Rational::make(sum, (long long)trace.steps.size())) << "\n";
      }
      break;
    }
    case Outcome::CycleDetected: {
      std::cout << "outcome: cycle at step " << trace.cycle_start << " period "
                << trace.cycle_period << "\n";
      std::cout << "cycle:";
      for (long long i = trace.cycle_start; i < trace.cycle_start + trace.cycle_period; ++i)
        std::cout << " " << arena.name(trace.steps[i].cfg.vertex);
      std::cout << "\n";
      std::cout << "mean-payoff: " << to_string(mean_payoff_of(trace)) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_certify(const std::string& game_path, const std::string& cert_path) {
  Arena arena = load_game(game_path);
  ThresholdMap T = parse_thresholds(read_file(cert_path), arena);
  CertifyResult r = certify(arena, T);
  if (r.accepted) {
    std::cout << "ACCEPT\n";
    return 0;
  }
  std::cout << "REJECT: " << r.witness << "\n";
  return 1;
}

int cmd_decide(const std::string& game_path, const std::string& vertex, const std::string& level) {
  Arena arena = load_game(game_path);
  int v = arena.index_of(vertex);
  Ord l = parse_budget(level);
  bool yes = decide_threshold(arena, v, l);
  std::cout << (yes ? "true" : "false") << "\n";
  return yes ? 0 : 1;
}

int cmd_oracle(const std::string& game_path, long long horizon) {
  Arena arena = load_game(game_path);
  DPTable dp = dp_solve(arena, horizon);
  std::vector<EnergyTable> mus = mu_n_tables(arena, horizon);
  long long mismatches = 0;
  for (long long m = 0; m <= horizon; ++m)
    for (int v = 0; v < arena.num_vertices(); ++v)
      for (Ord b = 0; b <= arena.max_budget(); ++b) {
        long long mu = mus[m].at(v, b);
        long long dp_e = min_winning_energy(dp, v, m, b);
        if (mu != dp_e) {
          ++mismatches;
          std::cout << "mismatch at " << arena.name(v) << " " << format_budget(b) << " horizon "
                    << m << ": recursion " << format_energy(mu) << " vs table "
                    << format_energy(dp_e) << "\n";
        }
      }
  if (mismatches == 0) {
    std::cout << "OK: horizons 0.." << horizon << " agree\n";
    return 0;
  }
  return 1;
}

int cmd_meanpayoff(const std::string& game_path, const std::string& target) {
  Arena arena = load_game(game_path);
  auto [p, q] = parse_target(target);
  Arena shifted = reduce_mean_payoff(arena, p, q);
  FixedPointResult fp = solve_energy(shifted);
  std::cout << "target: " << p << "/" << q << "\n";
  for (int v = 0; v < arena.num_vertices(); ++v)
    for (Ord b = 0; b <= arena.max_budget(); ++b)
      std::cout << arena.name(v) << " " << format_budget(b) << " "
                << (is_inf(fp.energy.at(v, b)) ? "min" : "max") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-bidding energy and mean-payoff game solver"};
  app.require_subcommand(1);

  std::string game, init, pres_name = "vi", cons_name = "vi", cert, vertex, level, target = "0";
  long long energy = 0, steps = 0, horizon = 4;
  unsigned seed = 1;
  bool as_json = false;

  auto* solve = app.add_subcommand("solve", "print the energy table");
  solve->add_option("game", game)->required();

  auto* thr = app.add_subcommand("thresholds", "print threshold budgets");
  thr->add_option("game", game)->required();
  thr->add_flag("--json", as_json, "emit a certificate document");

  auto* strat = app.add_subcommand("strategy", "emit a positional budget-agnostic strategy");
  strat->add_option("game", game)->required();
  strat->add_option("--player", pres_name, "pres or cons")
      ->required()
      ->check(CLI::IsMember({"pres", "cons"}));
  std::string fmt = "table";
  strat->add_option("--format", fmt)->check(CLI::IsMember({"table"}));

  auto* sim = app.add_subcommand("simulate", "run a play between two strategies");
  sim->add_option("game", game)->required();
  sim->add_option("--init", init, "VERTEX:BUDGET")->required();
  sim->add_option("--energy", energy)->required();
  sim->add_option("--pres", pres_name, "vi, agn, tb");
  sim->add_option("--cons", cons_name, "vi, cycle, agn, random");
  sim->add_option("--steps", steps, "0 = default bound");
  sim->add_option("--seed", seed);

  auto* cert_cmd = app.add_subcommand("certify", "check a threshold certificate");
  cert_cmd->add_option("game", game)->required();
  cert_cmd->add_option("thresholds", cert)->required();

  auto* dec = app.add_subcommand("decide", "is Th(vertex) >= level?");
  dec->add_option("game", game)->required();
  dec->add_option("--vertex", vertex)->required();
  dec->add_option("--level", level)->required();

  auto* orc = app.add_subcommand("oracle", "cross-check the recursion against the winner table");
  orc->add_option("game", game)->required();
  orc->add_option("--horizon", horizon);

  auto* mp = app.add_subcommand("meanpayoff", "per-configuration mean-payoff winners");
  mp->add_option("game", game)->required();
  mp->add_option("--target", target, "P/Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(game);
    if (thr->parsed()) return cmd_thresholds(game, as_json);
    if (strat->parsed()) return cmd_strategy(game, pres_name);
    if (sim->parsed()) return cmd_simulate(game, init, energy, pres_name, cons_name, steps, seed);
    if (cert_cmd->parsed()) return cmd_certify(game, cert);
    if (dec->parsed()) return cmd_decide(game, vertex, level);
    if (orc->parsed()) return cmd_oracle(game, horizon);
    if (mp->parsed()) return cmd_meanpayoff(game, target);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 2;
  }
  return 2;
}
