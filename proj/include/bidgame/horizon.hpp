#pragma once

#include <vector>

#include "bidgame/energy_table.hpp"

namespace bidgame {

// Finite-horizon backward recursion.  mu_n(v,B) is the minimal initial energy
// with which Pres survives n more auction rounds from <v,B>.

EnergyTable mu_zero(const Arena& arena);

// One backward step: for every configuration, minimize over Pres bids the
// worse of the two bidding outcomes (Cons trumping is only available while
// affordable within the total budget).
EnergyTable mu_step(const Arena& arena, const EnergyTable& prev);

// [mu_0, ..., mu_n].
std::vector<EnergyTable> mu_n_tables(const Arena& arena, long long n);

// Pres's guaranteed outcome of a single bid b from <v,B> against the best
// Cons reply, evaluated on a table for the remaining horizon.  Used by the
// solver and by strategy extraction.
struct BidOutcome {
  long long e_win = 0;       // Pres wins the bidding, best move
  long long e_lose = 0;      // Cons trumps, worst move (INF_ENERGY if absent)
  bool cons_can_trump = false;
  long long e_next = 0;      // max of the applicable outcomes
};

BidOutcome bid_outcome(const Arena& arena, const EnergyTable& table, int v, Ord budget, Ord bid);

}  // namespace bidgame
