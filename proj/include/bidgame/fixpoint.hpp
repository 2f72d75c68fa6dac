#pragma once

#include "bidgame/horizon.hpp"
#include "bidgame/strategy.hpp"

namespace bidgame {

struct FixedPointResult {
  EnergyTable energy;
  long long iterations = 0;
  long long trim_bound = 0;  // |V| * k * W
};

// Iterate trimmed steps (entries above |V|kW become +inf) until two
// consecutive tables coincide.  The fixed point is the energy threshold
// function: minimal initial energy with which Pres survives forever.
FixedPointResult solve_energy(const Arena& arena);

// Positional strategy reading off the fixed point: bid the minimizer of the
// one-step outcome, move to the minimizing neighbor.  Ties break toward the
// smaller bid ordinal, then the smaller vertex index.  Undefined wherever
// Energy is infinite.
PositionalStrategy sigma_vi(const Arena& arena, const FixedPointResult& fp);

}  // namespace bidgame
