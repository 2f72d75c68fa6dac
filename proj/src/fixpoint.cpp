#include "bidgame/fixpoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidgame {

namespace {

void trim(EnergyTable& t, long long bound) {
  for (long long& v : t.values)
    if (v > bound) v = INF_ENERGY;
}

}  // namespace

FixedPointResult solve_energy(const Arena& arena) {
  arena.validate();
  FixedPointResult r;
  r.trim_bound = arena.trim_bound();
  long long max_iters =
      (long long)arena.num_vertices() * arena.budget_count() * (r.trim_bound + 2);

  EnergyTable cur = mu_zero(arena);
  trim(cur, r.trim_bound);
  for (;;) {
    EnergyTable next = mu_step(arena, cur);
    trim(next, r.trim_bound);
    ++r.iterations;
    if (next == cur) break;
    cur = std::move(next);
    if (r.iterations > max_iters)
      throw std::logic_error("energy iteration exceeded the lattice height bound");
  }
  cur.horizon = -1;
  r.energy = std::move(cur);
  return r;
}

PositionalStrategy sigma_vi(const Arena& arena, const FixedPointResult& fp) {
  PositionalStrategy s(arena.num_vertices(), arena.budget_count());
  for (int v = 0; v < arena.num_vertices(); ++v) {
    for (Ord b = 0; b <= arena.max_budget(); ++b) {
      if (is_inf(fp.energy.at(v, b))) continue;
      Ord best_bid = -1;
      long long best = INF_ENERGY;
      for (Ord bid = 0; bid <= b; ++bid) {
        if (!legal_bid(bid, b)) continue;
        long long e = bid_outcome(arena, fp.energy, v, b, bid).e_next;
        if (e < best) {
          best = e;
          best_bid = bid;
        }
      }
      int best_target = -1;
      long long best_need = INF_ENERGY;
      for (const Edge& e : arena.neighbors(v)) {
        long long need =
            std::max(sub_weight(fp.energy.at(e.to, ord_sub(b, best_bid)), e.weight), 0LL);
        if (need < best_need || (need == best_need && e.to < best_target)) {
          best_need = need;
          best_target = e.to;
        }
      }
      s.set(v, b, Action{best_bid, best_target});
    }
  }
  return s;
}

}  // namespace bidgame
