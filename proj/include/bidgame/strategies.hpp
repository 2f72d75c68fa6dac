#pragma once

#include <random>
#include <vector>

#include "bidgame/thresholds.hpp"

namespace bidgame {

// ---- Pres side ----

// Budget-agnostic positional strategy: act as sigma_vi at the trimmed budget.
// Defined at every (v,B) with T(v) below top and B >= T(v).
PositionalStrategy sigma_agn(const Arena& arena, const FixedPointResult& fp, const ThresholdMap& T,
                             const PositionalStrategy& vi);

// Sufficient initial energy for sigma_agn from any above-threshold start:
// (k+1) * (W + max_v Energy(v, T(v))).
long long sigma_agn_energy_bound(const Arena& arena, const FixedPointResult& fp,
                                 const ThresholdMap& T);

// Pres's spare change |B - T(v)| (integral part of the ordinal gap).
inline long long spare_change(const ThresholdMap& T, int v, Ord budget) {
  return ord_sub(budget, T.at(v)) / 2;
}

// ---- Cons side ----

// Finite-horizon winning rule for Cons, read off the horizon tables: Cons
// wins state <v,e,m,B> iff e < mu_m(v,B).  cons_action searches for a single
// reply (bid, target) beating every legal Pres action, which exists at every
// Cons-winning state by determinacy.
class TauFinite {
 public:
  TauFinite(const Arena& arena, long long n);

  long long horizon() const { return n_; }
  long long mu(int v, Ord budget, long long m) const { return tables_[m].at(v, budget); }
  bool cons_wins(int v, long long e, long long m, Ord pres_budget) const;
  Action cons_action(int v, long long e, long long m, Ord pres_budget) const;

 private:
  const Arena* arena_;
  long long n_;
  std::vector<EnergyTable> tables_;
};

// Cons strategy that simulates a finite-horizon win and excises closed
// negative configuration cycles from the simulation, so any finite initial
// energy is eventually consumed.  Genuinely winning when the start satisfies
// initial_energy < Energy(v,B); otherwise it degrades to a best-effort
// adversary at the deepest available horizon.
class TauCycleSkip : public Strategy {
 public:
  TauCycleSkip(const Arena& arena, const FixedPointResult& fp, const Configuration& init,
               long long initial_energy);

  Action decide(const Configuration& cfg) override;
  void observe(const StepRecord& step) override;
  std::string fingerprint() const override;

  long long horizon() const { return tau_.horizon(); }

 private:
  struct SimEntry {
    Configuration cfg;
    long long energy;
  };

  const Arena* arena_;
  TauFinite tau_;
  std::vector<SimEntry> sim_;
};

// Minimal horizon n at which Cons, holding budget cons_budget at v, can
// consume energy e within n rounds (from Cons's perspective the horizon-n
// consumable energy is mu_n at the complementary Pres budget, minus one).
long long p_of_e(const Arena& arena, const ThresholdMap& th_prime, int v, Ord cons_budget,
                 long long e);

// Watchdog bound on the number of non-excised steps starting at energy e.
long long psi_bound(const Arena& arena, const ThresholdMap& th_prime, int v, Ord cons_budget,
                    long long e);

// Budget-agnostic Cons strategy: at simulated energy e, act as the horizon
// p_of_e(e) rule at the trimmed Cons budget, wrapped with the cycle-skipping
// driver.  Wins for every finite initial energy wherever Th'(v) is below top
// and the Cons budget is above it.
class TauAgn : public Strategy {
 public:
  TauAgn(const Arena& arena, const ThresholdMap& th_prime);

  Action decide(const Configuration& cfg) override;
  void observe(const StepRecord& step) override;
  std::string fingerprint() const override;

 private:
  struct SimEntry {
    int vertex;
    Ord trimmed;  // trimmed Cons budget, part of the cycle key
    long long energy;
  };

  Action decide_at(int vertex, Ord cons_bud);

  const Arena* arena_;
  ThresholdMap th_prime_;
  long long reset_energy_;   // 2|V|kW
  long long floor_energy_;   // |V|kW
  long long sim_energy_;
  std::vector<SimEntry> sim_;
  std::vector<TauFinite> cache_;  // indexed by horizon
  const TauFinite& tau_for(long long n);
};

// Positional Cons reply tuned against sigma_vi: assume Pres bids per the
// fixed point; trump and chase the worst neighbor when that does not lower
// the pressure, otherwise concede with bid 0.
PositionalStrategy cons_best_response(const Arena& arena, const FixedPointResult& fp,
                                      const PositionalStrategy& vi);

// Uniformly random legal Cons play.
class RandomCons : public Strategy {
 public:
  RandomCons(const Arena& arena, long long k, unsigned seed) : arena_(&arena), k_(k), rng_(seed) {}

  Action decide(const Configuration& cfg) override;
  std::string fingerprint() const override { return std::to_string(draws_); }

 private:
  const Arena* arena_;
  long long k_;
  std::mt19937 rng_;
  unsigned long long draws_ = 0;
};

}  // namespace bidgame
