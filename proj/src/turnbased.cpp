#include "bidgame/turnbased.hpp"

#include <algorithm>
#include <stdexcept>

#include "bidgame/energy_table.hpp"

namespace bidgame {

namespace {

struct Builder {
  const Arena& arena;
  const ThresholdMap& T;
  TurnBasedGame& g;
  TurnBasedGame::Owner responder_owner;

  int new_node(TurnBasedGame::Owner o, std::string label) {
    g.nodes.push_back(TurnBasedGame::Node{o, std::move(label), {}, -1, -1});
    return (int)g.nodes.size() - 1;
  }

  // Where does the chooser land at vertex u with budget l?  Inside the two
  // tracked copies play continues; above them the chooser banked spare change
  // (sink in its favor); below the threshold it has lost the invariant.
  int landing(int u, Ord l) const {
    if (T.is_top(u) || l < T.at(u)) return g.dead_node;
    if (l > T.at(u) + 1) return g.sink_node[u];
    return g.chooser_node[u][l - T.at(u)];
  }

  // Responder for "chooser at <v,b> bids x, moving to u on a win".  The
  // opponent concedes (when a strictly losing bid exists) or wins with any
  // affordable counter-bid; it holds the advantage exactly when b is plain.
  int add_responder(int v, Ord b, Ord x, int u) {
    int rn = new_node(responder_owner, arena.name(v) + ":" + format_budget(b) + " bid " +
                                           format_budget(x) +
                                           (u >= 0 ? " -> " + arena.name(u) : ""));
    g.nodes[rn].bid = x;
    g.nodes[rn].move = u;

    bool concede_possible = x > 0 || !starred(b);
    if (concede_possible && u >= 0)
      g.nodes[rn].succ.emplace_back(landing(u, b - x), arena.weight(v, u));

    Ord opp = arena.max_budget() - b;
    for (Ord c = trump(b, x); c <= opp; ++c) {
      if (starred(b) && starred(c)) continue;  // opponent lacks the advantage
      for (const Edge& e : arena.neighbors(v))
        g.nodes[rn].succ.emplace_back(landing(e.to, b + c), e.weight);
    }
    return rn;
  }
};

}  // namespace

TurnBasedGame build_turn_based(const Arena& arena, const ThresholdMap& T, Side side) {
  AverageCheck av = check_average(arena, T);
  if (!av.ok)
    throw invalid_certificate_error("threshold map violates the average law at " +
                                    arena.name(av.witness));

  TurnBasedGame g;
  g.side = side;
  auto chooser_owner = side == Side::Pres ? TurnBasedGame::Owner::Min : TurnBasedGame::Owner::Max;
  auto responder_owner = side == Side::Pres ? TurnBasedGame::Owner::Max : TurnBasedGame::Owner::Min;
  long long spare_loop = side == Side::Pres ? 0 : -1;
  long long dead_loop = side == Side::Pres ? -1 : 0;

  int nv = arena.num_vertices();
  g.chooser_node.assign(nv, {-1, -1});
  g.sink_node.assign(nv, -1);

  Builder b{arena, T, g, responder_owner};

  g.dead_node = b.new_node(chooser_owner, "lost");
  g.nodes[g.dead_node].succ.emplace_back(g.dead_node, dead_loop);

  for (int v = 0; v < nv; ++v) {
    g.sink_node[v] = b.new_node(chooser_owner, "spare:" + arena.name(v));
    g.nodes[g.sink_node[v]].succ.emplace_back(g.sink_node[v], spare_loop);
    if (T.is_top(v)) continue;
    for (int i = 0; i < 2; ++i) {
      Ord bud = T.at(v) + i;
      if (bud > arena.max_budget()) continue;
      g.chooser_node[v][i] =
          b.new_node(chooser_owner, arena.name(v) + ":" + format_budget(bud));
    }
  }

  for (int v = 0; v < nv; ++v) {
    if (T.is_top(v)) continue;
    BidPlan plan = bid_plan(arena, T, v);
    for (int i = 0; i < 2; ++i) {
      int cn = g.chooser_node[v][i];
      if (cn < 0) continue;
      Ord bud = T.at(v) + i;
      // The planned bid: its parity matches bud, except for a flat plan,
      // which sticks to plain 0 at both copies.
      Ord q = plan.flat ? 0 : plan.base_bid + i;

      std::vector<int> responders;
      if (plan.flat && starred(bud)) {
        // Bidding plain 0 while holding the advantage can never win the
        // bidding, so no target commitment is needed.
        responders.push_back(b.add_responder(v, bud, 0, -1));
      } else {
        for (int u : plan.allowed) responders.push_back(b.add_responder(v, bud, q, u));

        // At starred copies the chooser may bid one step lower without the
        // advantage mark, keeping the tie-break in hand.
        if (starred(bud)) {
          if (q - 1 > 0) {
            for (const Edge& e : arena.neighbors(v))
              responders.push_back(b.add_responder(v, bud, q - 1, e.to));
          } else {
            responders.push_back(b.add_responder(v, bud, 0, -1));
          }
        }
      }
      for (int rn : responders) g.nodes[cn].succ.emplace_back(rn, 0);
    }
  }

  for (const auto& n : g.nodes)
    for (const auto& [s, w] : n.succ) g.max_weight = std::max(g.max_weight, w < 0 ? -w : w);
  return g;
}

std::vector<long long> solve_turn_based(const TurnBasedGame& tbg) {
  long long bound = tbg.trim_bound();
  std::vector<long long> f(tbg.nodes.size(), 0);
  long long guard = (long long)tbg.nodes.size() * (bound + 2) + 2;
  for (long long it = 0;; ++it) {
    if (it > guard) throw std::logic_error("turn-based iteration exceeded its bound");
    bool changed = false;
    std::vector<long long> nf(f.size());
    for (size_t i = 0; i < tbg.nodes.size(); ++i) {
      const auto& node = tbg.nodes[i];
      long long best = node.owner == TurnBasedGame::Owner::Min ? INF_ENERGY : 0;
      for (const auto& [s, w] : node.succ) {
        long long need = std::max(sub_weight(f[s], w), 0LL);
        best = node.owner == TurnBasedGame::Owner::Min ? std::min(best, need)
                                                       : std::max(best, need);
      }
      if (best > bound) best = INF_ENERGY;
      nf[i] = best;
      changed |= nf[i] != f[i];
    }
    f = std::move(nf);
    if (!changed) break;
  }
  return f;
}

namespace {

bool side_winnable(const Arena& arena, const ThresholdMap& T, Side side, std::string& witness) {
  TurnBasedGame g = build_turn_based(arena, T, side);
  std::vector<long long> f = solve_turn_based(g);
  for (int v = 0; v < arena.num_vertices(); ++v) {
    if (T.is_top(v)) continue;
    for (int i = 0; i < 2; ++i) {
      int n = g.chooser_node[v][i];
      if (n < 0) continue;
      bool chooser_ok = side == Side::Pres ? !is_inf(f[n]) : is_inf(f[n]);
      if (!chooser_ok) {
        witness = g.nodes[n].label;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

CertifyResult certify(const Arena& arena, const ThresholdMap& T) {
  CertifyResult r;
  AverageCheck av = check_average(arena, T);
  if (!av.ok) {
    r.witness = "average law fails at " + arena.name(av.witness) + ", expected " +
                format_budget(av.expected);
    return r;
  }
  try {
    if (!side_winnable(arena, T, Side::Pres, r.witness)) {
      r.witness = "not winnable for Pres at " + r.witness;
      return r;
    }
    ThresholdMap Tp = complement(T);
    AverageCheck avp = check_average(arena, Tp);
    if (!avp.ok) {
      r.witness = "complement violates the average law at " + arena.name(avp.witness);
      return r;
    }
    if (!side_winnable(arena, Tp, Side::Cons, r.witness)) {
      r.witness = "not winnable for Cons at " + r.witness;
      return r;
    }
  } catch (const illegal_bid_error& e) {
    r.witness = std::string("inconsistent bid plan: ") + e.what();
    return r;
  } catch (const invalid_certificate_error& e) {
    r.witness = e.what();
    return r;
  }
  r.accepted = true;
  return r;
}

bool decide_threshold(const Arena& arena, int v, Ord level) {
  FixedPointResult fp = solve_energy(arena);
  ThresholdMap T = thresholds(arena, fp);
  CertifyResult cr = certify(arena, T);
  if (!cr.accepted)
    throw std::logic_error("self-check failed: computed thresholds rejected (" + cr.witness + ")");
  return T.at(v) >= level;
}

PositionalStrategy extract_positional(const Arena& arena, const ThresholdMap& T,
                                      const TurnBasedGame& tbg,
                                      const std::vector<long long>& solution) {
  PositionalStrategy s(arena.num_vertices(), arena.budget_count());
  for (int v = 0; v < arena.num_vertices(); ++v) {
    if (T.is_top(v)) continue;
    // Pick the best committed (bid, target) once per tracked budget copy.
    std::array<Action, 2> choice = {Action{-1, -1}, Action{-1, -1}};
    for (int i = 0; i < 2; ++i) {
      int cn = tbg.chooser_node[v][i];
      if (cn < 0) continue;
      bool minimize = tbg.side == Side::Pres;
      long long best = minimize ? INF_ENERGY + 1 : -1;
      for (const auto& [r, w] : tbg.nodes[cn].succ) {
        (void)w;
        long long val = std::min(solution[r], INF_ENERGY);
        if (minimize ? val < best : val > best) {
          best = val;
          int target = tbg.nodes[r].move;
          if (target < 0) target = arena.neighbors(v).front().to;
          choice[i] = Action{tbg.nodes[r].bid, target};
        }
      }
    }
    for (Ord pres_b = 0; pres_b <= arena.max_budget(); ++pres_b) {
      Ord own = tbg.side == Side::Pres ? pres_b : cons_budget(arena.k(), pres_b);
      if (own < T.at(v)) continue;
      Ord rb = relativebud(T, v, own);
      int i = (int)(rb - T.at(v));
      if (choice[i].target < 0) continue;
      s.set(v, pres_b, choice[i]);
    }
  }
  return s;
}

}  // namespace bidgame
