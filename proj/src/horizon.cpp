#include "bidgame/horizon.hpp"

#include <algorithm>

namespace bidgame {

EnergyTable mu_zero(const Arena& arena) {
  EnergyTable t(arena.num_vertices(), arena.budget_count(), 0);
  t.horizon = 0;
  return t;
}

BidOutcome bid_outcome(const Arena& arena, const EnergyTable& table, int v, Ord budget, Ord bid) {
  BidOutcome out;
  out.e_win = INF_ENERGY;
  for (const Edge& e : arena.neighbors(v)) {
    long long need = std::max(sub_weight(table.at(e.to, ord_sub(budget, bid)), e.weight), 0LL);
    out.e_win = std::min(out.e_win, need);
  }
  Ord t = trump(budget, bid);
  out.cons_can_trump = budget + t <= arena.max_budget();
  out.e_lose = INF_ENERGY;
  if (out.cons_can_trump) {
    out.e_lose = 0;
    for (const Edge& e : arena.neighbors(v)) {
      long long need = std::max(sub_weight(table.at(e.to, budget + t), e.weight), 0LL);
      out.e_lose = std::max(out.e_lose, need);
    }
    out.e_next = std::max(out.e_win, out.e_lose);
  } else {
    out.e_next = out.e_win;
  }
  return out;
}

EnergyTable mu_step(const Arena& arena, const EnergyTable& prev) {
  EnergyTable next(arena.num_vertices(), arena.budget_count(), 0);
  next.horizon = prev.horizon >= 0 ? prev.horizon + 1 : -1;
  for (int v = 0; v < arena.num_vertices(); ++v) {
    for (Ord b = 0; b <= arena.max_budget(); ++b) {
      long long best = INF_ENERGY;
      for (Ord bid = 0; bid <= b; ++bid) {
        if (!legal_bid(bid, b)) continue;
        best = std::min(best, bid_outcome(arena, prev, v, b, bid).e_next);
      }
      next.at(v, b) = best;
    }
  }
  return next;
}

std::vector<EnergyTable> mu_n_tables(const Arena& arena, long long n) {
  std::vector<EnergyTable> tables;
  tables.push_back(mu_zero(arena));
  for (long long i = 1; i <= n; ++i) tables.push_back(mu_step(arena, tables.back()));
  return tables;
}

}  // namespace bidgame
