#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "bidgame/arena.hpp"

namespace bidgame {

// Sentinel for "no finite energy suffices"; ordered above all real values and
// safe to add small weights to without wrapping.
inline constexpr long long INF_ENERGY = std::numeric_limits<long long>::max() / 4;

inline bool is_inf(long long e) { return e >= INF_ENERGY; }

// x - w with the sentinel absorbing.
inline long long sub_weight(long long x, long long w) { return is_inf(x) ? INF_ENERGY : x - w; }

// Dense (vertex, budget-ordinal) -> extended natural table.
struct EnergyTable {
  int num_vertices = 0;
  Ord budget_count = 0;
  long long horizon = -1;  // -1 when not a finite-horizon table
  std::vector<long long> values;

  EnergyTable() = default;
  EnergyTable(int nv, Ord nb, long long fill = 0)
      : num_vertices(nv), budget_count(nb), values((size_t)nv * nb, fill) {}

  long long& at(int v, Ord b) { return values[(size_t)v * budget_count + b]; }
  long long at(int v, Ord b) const { return values[(size_t)v * budget_count + b]; }

  friend bool operator==(const EnergyTable& a, const EnergyTable& b) {
    return a.num_vertices == b.num_vertices && a.budget_count == b.budget_count &&
           a.values == b.values;
  }
};

}  // namespace bidgame
