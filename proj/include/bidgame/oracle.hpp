#pragma once

#include <vector>

#include "bidgame/thresholds.hpp"

namespace bidgame {

struct oracle_size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground-truth winner table for the n-round survival game, computed by plain
// backward induction over explicit states <v, e, m, B> with e clamped at -1.
// Deliberately independent of the recursion modules: it re-derives everything
// from the one-step bidding semantics.
struct DPTable {
  long long n = 0;
  long long e_max = 0;  // e ranges over -1..e_max
  int num_vertices = 0;
  Ord budget_count = 0;
  std::vector<char> pres_wins;  // 1 iff Pres wins the state

  size_t idx(int v, long long e, long long m, Ord b) const {
    return (((size_t)m * num_vertices + v) * (e_max + 2) + (e + 1)) * budget_count + b;
  }
  bool wins(int v, long long e, long long m, Ord b) const {
    if (e < -1) e = -1;
    if (e > e_max) e = e_max;
    return pres_wins[idx(v, e, m, b)] != 0;
  }
};

// Backward induction for horizon n.  Refuses instances whose state space
// exceeds the guard.
DPTable dp_solve(const Arena& arena, long long n, size_t max_states = 200u * 1000 * 1000);

// Minimal e with a Pres win at <v,e,m,B>; INF_ENERGY when none exists in range.
long long min_winning_energy(const DPTable& dp, int v, long long m, Ord b);

// Grow the horizon until the per-configuration minimal winning energies
// stabilize (with entries above |V|kW classified as infinite), then read off
// the minimal finite-energy budget per vertex.
ThresholdMap oracle_threshold(const Arena& arena, size_t max_states = 200u * 1000 * 1000);

}  // namespace bidgame
