#include "bidgame/arena.hpp"

namespace bidgame {

namespace {

void check_action(const Arena& arena, const Configuration& cfg, const Action& a, Ord budget,
                  Player who) {
  if (!legal_bid(a.bid, budget))
    throw illegal_bid_error(std::string("illegal bid by ") + to_string(who) + ": bid " +
                            format_budget(a.bid) + " from budget " + format_budget(budget));
  if (!arena.has_edge(cfg.vertex, a.target))
    throw illegal_bid_error(std::string("illegal move by ") + to_string(who) + ": no edge " +
                            arena.name(cfg.vertex) + " -> " + arena.name(a.target));
}

}  // namespace

StepResult resolve_bidding(const Arena& arena, const Configuration& cfg, const Action& pres,
                           const Action& cons) {
  Ord pres_bud = cfg.pres_budget;
  Ord cons_bud = cons_budget(arena.k(), pres_bud);
  check_action(arena, cfg, pres, pres_bud, Player::Pres);
  check_action(arena, cfg, cons, cons_bud, Player::Cons);

  bool pres_takes;
  if (pres.bid != cons.bid) {
    pres_takes = pres.bid > cons.bid;
  } else {
    // Equal ordinals only happen with two plain bids; the advantage holder
    // declined to use it, so the other player takes the round.
    pres_takes = !starred(pres_bud);
  }

  StepResult r;
  if (pres_takes) {
    r.winner = Player::Pres;
    r.next = Configuration{pres.target, ord_sub(pres_bud, pres.bid)};
  } else {
    r.winner = Player::Cons;
    r.next = Configuration{cons.target, pres_bud + cons.bid};
  }
  r.weight = arena.weight(cfg.vertex, r.next.vertex);
  return r;
}

}  // namespace bidgame
