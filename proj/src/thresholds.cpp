#include "bidgame/thresholds.hpp"

#include <algorithm>

namespace bidgame {

ThresholdMap thresholds(const Arena& arena, const FixedPointResult& fp) {
  ThresholdMap T;
  T.k = arena.k();
  T.values.assign(arena.num_vertices(), T.top());
  for (int v = 0; v < arena.num_vertices(); ++v) {
    for (Ord b = 0; b <= arena.max_budget(); ++b) {
      if (!is_inf(fp.energy.at(v, b))) {
        T.values[v] = b;
        break;
      }
    }
  }
  return T;
}

namespace {

// Neighbor extremes by threshold value; ties go to the smaller index, which
// cannot change any T-derived quantity.
std::pair<Ord, Ord> neighbor_extremes(const Arena& arena, const ThresholdMap& T, int v) {
  Ord lo = T.top() + 1, hi = -1;
  for (const Edge& e : arena.neighbors(v)) {
    lo = std::min(lo, T.at(e.to));
    hi = std::max(hi, T.at(e.to));
  }
  return {lo, hi};
}

// The value the average law forces at v, as an ordinal.
Ord forced_value(Ord lo, Ord hi) {
  long long sum = lo / 2 + hi / 2;  // integral parts; top is plain k+1
  bool min_starred = starred(lo);
  if (sum % 2 == 0 && !min_starred) return sum;          // eps = 0
  if (sum % 2 != 0 && min_starred) return sum + 1;       // eps = 1
  return 2 * (sum / 2) + 1;                              // eps = *
}

}  // namespace

AverageCheck check_average(const Arena& arena, const ThresholdMap& T) {
  AverageCheck r;
  for (int v = 0; v < arena.num_vertices(); ++v) {
    auto [lo, hi] = neighbor_extremes(arena, T, v);
    Ord want = std::min(forced_value(lo, hi), T.top());
    if (T.at(v) != want) {
      r.ok = false;
      r.witness = v;
      r.expected = want;
      return r;
    }
  }
  return r;
}

ThresholdMap complement(const ThresholdMap& T) {
  ThresholdMap C;
  C.k = T.k;
  C.values.reserve(T.values.size());
  for (Ord t : T.values) C.values.push_back(ord_sub(T.top(), t));
  return C;
}

BidPlan bid_plan(const Arena& arena, const ThresholdMap& T, int v) {
  if (T.is_top(v)) throw below_threshold_error("no bid plan at unwinnable vertex " + arena.name(v));
  auto [lo, hi] = neighbor_extremes(arena, T, v);
  (void)hi;
  BidPlan plan;
  // T(v) minus the min neighbor threshold, rounded through the next plain
  // value when that threshold is starred.  When that rounding underflows
  // (T(v) and the minimum are the same starred value) the plan collapses to
  // bidding plain 0: losing or tying keeps the budget at or above T(v),
  // which already covers every neighbor.
  Ord raw = T.at(v) - lo - (starred(lo) ? 1 : 0);
  if (raw < 0) {
    plan.base_bid = 0;
    plan.flat = true;
  } else {
    plan.base_bid = raw;
  }
  for (const Edge& e : arena.neighbors(v)) {
    bool in = starred(lo) ? T.at(e.to) <= lo + 1 : T.at(e.to) == lo;
    if (in) plan.allowed.push_back(e.to);
  }
  std::sort(plan.allowed.begin(), plan.allowed.end());
  plan.allowed.erase(std::unique(plan.allowed.begin(), plan.allowed.end()), plan.allowed.end());
  return plan;
}

Ord optbid(const Arena& arena, const ThresholdMap& T, int v, Ord budget) {
  if (budget < T.at(v))
    throw below_threshold_error("budget " + format_budget(budget) + " below threshold at " +
                                arena.name(v));
  BidPlan plan = bid_plan(arena, T, v);
  if (plan.flat) return 0;
  return starred(plan.base_bid) == starred(budget) ? plan.base_bid : plan.base_bid + 1;
}

Ord relativebud(const ThresholdMap& T, int v, Ord budget) {
  Ord t = T.at(v);
  if (budget < t)
    throw below_threshold_error("budget " + format_budget(budget) +
                                " below threshold ordinal " + std::to_string(t));
  return starred(t) == starred(budget) ? t : t + 1;
}

}  // namespace bidgame
