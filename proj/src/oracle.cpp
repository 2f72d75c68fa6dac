#include "bidgame/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidgame {

DPTable dp_solve(const Arena& arena, long long n, size_t max_states) {
  arena.validate();
  DPTable dp;
  dp.n = n;
  dp.e_max = std::max(n * arena.max_weight(), 1LL);
  dp.num_vertices = arena.num_vertices();
  dp.budget_count = arena.budget_count();

  size_t states = (size_t)(n + 1) * dp.num_vertices * (dp.e_max + 2) * dp.budget_count;
  if (states > max_states)
    throw oracle_size_error("state space too large: " + std::to_string(states) + " states");
  dp.pres_wins.assign(states, 0);

  Ord top = arena.max_budget();
  for (long long m = 0; m <= n; ++m) {
    for (int v = 0; v < dp.num_vertices; ++v) {
      for (long long e = -1; e <= dp.e_max; ++e) {
        for (Ord b = 0; b <= top; ++b) {
          char win = 0;
          if (e >= 0 && m == 0) {
            win = 1;
          } else if (e >= 0) {
            for (Ord bid = 0; bid <= b && !win; ++bid) {
              if (!legal_bid(bid, b)) continue;
              Ord t = trump(b, bid);
              bool cons_affords = b + t <= top;
              bool trump_ok = true;
              if (cons_affords) {
                for (const Edge& edge : arena.neighbors(v)) {
                  long long e2 = std::min(std::max(e + edge.weight, -1LL), dp.e_max);
                  if (!dp.wins(edge.to, e2, m - 1, b + t)) {
                    trump_ok = false;
                    break;
                  }
                }
              }
              if (!trump_ok) continue;
              for (const Edge& edge : arena.neighbors(v)) {
                long long e2 = std::min(std::max(e + edge.weight, -1LL), dp.e_max);
                if (dp.wins(edge.to, e2, m - 1, b - bid)) {
                  win = 1;
                  break;
                }
              }
            }
          }
          dp.pres_wins[dp.idx(v, e, m, b)] = win;
        }
      }
    }
  }
  return dp;
}

long long min_winning_energy(const DPTable& dp, int v, long long m, Ord b) {
  for (long long e = 0; e <= dp.e_max; ++e)
    if (dp.wins(v, e, m, b)) return e;
  return INF_ENERGY;
}

ThresholdMap oracle_threshold(const Arena& arena, size_t max_states) {
  arena.validate();
  int nv = arena.num_vertices();
  Ord top = arena.max_budget();
  Ord nb = arena.budget_count();
  long long cutoff = arena.trim_bound();
  long long e_max = std::max(cutoff + arena.max_weight() + 1, 1LL);

  size_t layer_states = (size_t)nv * (e_max + 2) * nb;
  if (2 * layer_states > max_states)
    throw oracle_size_error("state space too large: " + std::to_string(2 * layer_states) +
                            " states per layer pair");

  auto idx = [&](int v, long long e, Ord b) { return ((size_t)v * (e_max + 2) + (e + 1)) * nb + b; };

  std::vector<char> prev(layer_states, 0);
  std::vector<char> next(layer_states, 0);
  std::vector<long long> min_prev((size_t)nv * nb, 0);
  std::vector<long long> min_next((size_t)nv * nb, 0);
  std::vector<char> lost((size_t)nv * nb, 0);  // conclusively unwinnable at any energy

  for (int v = 0; v < nv; ++v)
    for (long long e = 0; e <= e_max; ++e)
      for (Ord b = 0; b <= top; ++b) prev[idx(v, e, b)] = 1;

  long long guard = (long long)nv * nb * (cutoff + 2) + 2;
  for (long long it = 0; it <= guard; ++it) {
    for (int v = 0; v < nv; ++v) {
      for (Ord b = 0; b <= top; ++b) {
        for (long long e = -1; e <= e_max; ++e) {
          char win = 0;
          if (e >= 0) {
            for (Ord bid = 0; bid <= b && !win; ++bid) {
              if (!legal_bid(bid, b)) continue;
              Ord t = trump(b, bid);
              bool cons_affords = b + t <= top;
              auto ok = [&](int v2, long long e2, Ord b2) {
                if (lost[(size_t)v2 * nb + b2]) return false;
                e2 = std::min(std::max(e2, -1LL), e_max);
                return e2 >= 0 && prev[idx(v2, e2, b2)] != 0;
              };
              bool trump_ok = true;
              if (cons_affords)
                for (const Edge& edge : arena.neighbors(v)) {
                  if (!ok(edge.to, e + edge.weight, b + t)) {
                    trump_ok = false;
                    break;
                  }
                }
              if (!trump_ok) continue;
              for (const Edge& edge : arena.neighbors(v)) {
                if (ok(edge.to, e + edge.weight, b - bid)) {
                  win = 1;
                  break;
                }
              }
            }
          }
          next[idx(v, e, b)] = e >= 0 ? win : 0;
        }
        long long me = INF_ENERGY;
        for (long long e = 0; e <= e_max; ++e)
          if (next[idx(v, e, b)]) {
            me = e;
            break;
          }
        min_next[(size_t)v * nb + b] = me > cutoff ? INF_ENERGY : me;
      }
    }
    bool stable = min_next == min_prev;
    for (size_t i = 0; i < lost.size(); ++i) lost[i] = is_inf(min_next[i]) ? 1 : 0;
    std::swap(prev, next);
    std::swap(min_prev, min_next);
    if (stable) break;
    if (it == guard) throw std::logic_error("winner tables failed to stabilize within the bound");
  }

  ThresholdMap T;
  T.k = arena.k();
  T.values.assign(nv, T.top());
  for (int v = 0; v < nv; ++v)
    for (Ord b = 0; b <= top; ++b)
      if (!is_inf(min_prev[(size_t)v * nb + b])) {
        T.values[v] = b;
        break;
      }
  return T;
}

}  // namespace bidgame
