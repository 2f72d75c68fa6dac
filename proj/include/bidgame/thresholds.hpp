#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidgame/fixpoint.hpp"

namespace bidgame {

// Per-vertex minimal budget with finite energy, stored as ordinals.  The
// unwinnable sentinel is plain k+1, ordinal 2(k+1).
struct ThresholdMap {
  long long k = 0;
  std::vector<Ord> values;  // per vertex index

  Ord top() const { return 2 * (k + 1); }
  Ord at(int v) const { return values[v]; }
  bool is_top(int v) const { return values[v] >= top(); }

  friend bool operator==(const ThresholdMap&, const ThresholdMap&) = default;
};

struct AverageCheck {
  bool ok = true;
  int witness = -1;       // first failing vertex
  Ord expected = 0;       // value forced by the neighbors
};

struct BidPlan {
  Ord base_bid = 0;            // legal for budget T(v)
  std::vector<int> allowed;    // nonempty subset of N(v)
  // Set when every relevant neighbor shares v's starred threshold: the plan
  // degenerates to bidding plain 0 at both window copies (ties concede, so
  // the budget never drops below the threshold).
  bool flat = false;
};

ThresholdMap thresholds(const Arena& arena, const FixedPointResult& fp);

// Discrete average law: T(v) is the floor'd average of the integral parts of
// the extreme neighbor thresholds plus a correction encoding parity and the
// advantage bit of the minimum.
AverageCheck check_average(const Arena& arena, const ThresholdMap& T);

// Pointwise (k+1) - T(v) in ordinal arithmetic; swaps the two players' roles.
ThresholdMap complement(const ThresholdMap& T);

BidPlan bid_plan(const Arena& arena, const ThresholdMap& T, int v);

// The planned bid adjusted so its advantage bit matches the live budget.
Ord optbid(const Arena& arena, const ThresholdMap& T, int v, Ord budget);

// Trim excess budget: whichever of T(v), succ(T(v)) has the same advantage
// bit as the live budget.  Throws below_threshold_error when budget < T(v).
Ord relativebud(const ThresholdMap& T, int v, Ord budget);

}  // namespace bidgame
