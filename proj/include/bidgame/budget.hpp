#pragma once

#include <stdexcept>
#include <string>

namespace bidgame {

// Budgets and bids live on the chain 0 < 0* < 1 < 1* < ... where the star
// marks the tie-breaking advantage.  Everything is manipulated through the
// ordinal encoding ord(B) = 2*|B| + (starred ? 1 : 0), which turns the
// oplus/ominus case analysis into plain integer arithmetic.
using Ord = long long;

struct Budget {
  long long integral = 0;
  bool adv = false;

  friend bool operator==(const Budget&, const Budget&) = default;
};

struct illegal_bid_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct below_threshold_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct strategy_undefined_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Ord ordinal(Budget b) { return 2 * b.integral + (b.adv ? 1 : 0); }

inline Budget from_ordinal(Ord o) {
  if (o < 0) throw illegal_bid_error("negative budget ordinal");
  return Budget{o / 2, (o % 2) != 0};
}

inline bool starred(Ord o) { return (o % 2) != 0; }

inline Ord succ(Ord o) { return o + 1; }

inline Ord pred(Ord o) {
  if (o == 0) throw illegal_bid_error("predecessor of budget 0");
  return o - 1;
}

// ord(x (+) y) = ord(x) + ord(y); overflow only at machine width.
inline Budget budget_add(Budget x, Budget y) {
  return from_ordinal(ordinal(x) + ordinal(y));
}

// ord(x (-) y) = ord(x) - ord(y); underflow signals an illegal bid.
inline Ord ord_sub(Ord x, Ord y) {
  if (y > x) throw illegal_bid_error("budget underflow");
  return x - y;
}

inline Budget budget_sub(Budget x, Budget y) {
  return from_ordinal(ord_sub(ordinal(x), ordinal(y)));
}

// Minimal bid with which the opponent beats a bid b made from budget B:
// b itself when the bidder holds the advantage but bids plain, succ(b)
// otherwise.
inline Ord trump(Ord budget, Ord bid) {
  return (starred(budget) && !starred(bid)) ? bid : bid + 1;
}

inline Budget trump(Budget budget, Budget bid) {
  return from_ordinal(trump(ordinal(budget), ordinal(bid)));
}

// The opponent's budget: total is k* so the ordinals sum to 2k+1.
inline Ord cons_budget(long long k, Ord pres) {
  Ord total = 2 * k + 1;
  if (pres > total) throw illegal_bid_error("budget exceeds total");
  return total - pres;
}

inline Budget cons_budget(long long k, Budget pres) {
  return from_ordinal(cons_budget(k, ordinal(pres)));
}

// A bid is legal for a budget iff its ordinal fits and a starred bid is
// only made while holding the advantage.
inline bool legal_bid(Ord bid, Ord budget) {
  return bid >= 0 && bid <= budget && (!starred(bid) || starred(budget));
}

std::string format_budget(Ord o);
Ord parse_budget(const std::string& text);

}  // namespace bidgame
