#include <vector>

#include "bidgame/arena.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace bidgame;

namespace {

// Independent case-based reference for the budget operators, written from the
// four defining cases rather than the ordinal encoding the library uses.
Budget ref_add(Budget x, Budget y) {
  if (x.adv && y.adv) return Budget{x.integral + y.integral + 1, false};
  if (x.adv || y.adv) return Budget{x.integral + y.integral, true};
  return Budget{x.integral + y.integral, false};
}

// Returns false when the subtraction is undefined (underflow).
bool ref_sub(Budget x, Budget y, Budget& out) {
  if (x.adv && !y.adv) {  // x* - y = (x-y)*
    if (x.integral < y.integral) return false;
    out = Budget{x.integral - y.integral, true};
  } else if (x.adv && y.adv) {  // x* - y* = x - y
    if (x.integral < y.integral) return false;
    out = Budget{x.integral - y.integral, false};
  } else if (!x.adv && y.adv) {  // x - y* = (x-y-1)*
    if (x.integral < y.integral + 1) return false;
    out = Budget{x.integral - y.integral - 1, true};
  } else {  // x - y
    if (x.integral < y.integral) return false;
    out = Budget{x.integral - y.integral, false};
  }
  return true;
}

Budget mk(long long integral, bool adv) { return Budget{integral, adv}; }

}  // namespace

TEST_CASE("budget chain ordering and encoding") {
  CHECK(ordinal(mk(0, false)) == 0);
  CHECK(ordinal(mk(0, true)) == 1);
  CHECK(ordinal(mk(3, true)) == 7);
  for (Ord o = 0; o <= 40; ++o) {
    CHECK(ordinal(from_ordinal(o)) == o);
    if (o > 0) CHECK(ordinal(from_ordinal(o - 1)) < ordinal(from_ordinal(o)));
  }
  CHECK_THROWS_AS(from_ordinal(-1), illegal_bid_error);
}

TEST_CASE("budget addition examples") {
  CHECK(budget_add(mk(2, true), mk(3, false)) == mk(5, true));   // 2* + 3 = 5*
  CHECK(budget_add(mk(0, false), mk(0, false)) == mk(0, false)); // 0 + 0 = 0
  CHECK(budget_add(mk(2, true), mk(3, true)) == mk(6, false));   // 2* + 3* = 6
}

TEST_CASE("budget subtraction examples") {
  CHECK(budget_sub(mk(4, true), mk(2, true)) == mk(2, false));   // 4* - 2* = 2
  CHECK(budget_sub(mk(4, false), mk(2, true)) == mk(1, true));   // 4 - 2* = 1*
  CHECK(budget_sub(mk(5, false), mk(0, false)) == mk(5, false)); // 5 - 0 = 5
  CHECK_THROWS_AS(budget_sub(mk(1, false), mk(1, true)), illegal_bid_error);
}

TEST_CASE("ordinal isomorphism, exhaustive up to k = 8") {
  const Ord top = 2 * 8 + 1;
  for (Ord x = 0; x <= top; ++x) {
    for (Ord y = 0; y <= top; ++y) {
      Budget bx = from_ordinal(x), by = from_ordinal(y);
      Budget sum = budget_add(bx, by);
      CHECK(ordinal(sum) == x + y);
      CHECK(sum == ref_add(bx, by));
      Budget ref;
      if (ref_sub(bx, by, ref)) {
        Budget diff = budget_sub(bx, by);
        CHECK(ordinal(diff) == x - y);
        CHECK(diff == ref);
      } else {
        CHECK_THROWS_AS(budget_sub(bx, by), illegal_bid_error);
        CHECK(y > x);  // underflow cases are exactly the ordinal-order ones
      }
    }
  }
}

TEST_CASE("trump examples") {
  CHECK(trump(mk(3, true), mk(2, false)) == mk(2, false));  // advantage in hand
  CHECK(trump(mk(3, false), mk(2, false)) == mk(2, true));
  CHECK(trump(mk(3, true), mk(2, true)) == mk(3, false));
}

TEST_CASE("cons_budget complements to the total") {
  CHECK(cons_budget(5, mk(1, false)) == mk(4, true));
  CHECK(cons_budget(5, mk(5, true)) == mk(0, false));
  CHECK(cons_budget(1, mk(0, true)) == mk(1, false));
  for (long long k = 0; k <= 4; ++k)
    for (Ord b = 0; b <= 2 * k + 1; ++b)
      CHECK(b + cons_budget(k, b) == 2 * k + 1);
  CHECK_THROWS_AS(cons_budget(1, Ord{4}), illegal_bid_error);
}

TEST_CASE("legal bids") {
  CHECK(legal_bid(0, 0));
  CHECK(legal_bid(4, 5));
  CHECK_FALSE(legal_bid(6, 5));       // exceeds the budget
  CHECK_FALSE(legal_bid(1, 4));       // starred bid without the advantage
  CHECK(legal_bid(1, 5));             // starred bid with the advantage
  CHECK_FALSE(legal_bid(-1, 5));
}

TEST_CASE("bidding resolution on the worked examples") {
  Arena a = testutil::make_fig1();  // k = 1
  int v0 = a.index_of("v0"), v1 = a.index_of("v1"), v2 = a.index_of("v2");

  // <v0, 1*>: Pres bids 0* to v2, Cons bids 0; Pres's starred bid wins.
  StepResult r = resolve_bidding(a, Configuration{v0, 3}, Action{1, v2}, Action{0, v1});
  CHECK(r.winner == Player::Pres);
  CHECK(r.next == Configuration{v2, 2});
  CHECK(r.weight == 3);

  // <v0, 0*>: Pres bids 0* to v2, Cons bids 1 to v1; Cons outbids and pays.
  r = resolve_bidding(a, Configuration{v0, 1}, Action{1, v2}, Action{2, v1});
  CHECK(r.winner == Player::Cons);
  CHECK(r.next == Configuration{v1, 3});
  CHECK(r.weight == -2);

  // Equal plain bids while Pres holds the advantage: the non-holder wins.
  r = resolve_bidding(a, Configuration{v0, 3}, Action{0, v2}, Action{0, v1});
  CHECK(r.winner == Player::Cons);
  CHECK(r.next == Configuration{v1, 3});
}

TEST_CASE("bidding resolution rejects illegal actions") {
  Arena a = testutil::make_fig1();
  int v0 = a.index_of("v0"), v2 = a.index_of("v2");
  // Pres bid above budget.
  CHECK_THROWS_AS(resolve_bidding(a, Configuration{v0, 1}, Action{2, v2}, Action{0, v0}),
                  illegal_bid_error);
  // Pres starred bid without holding the advantage.
  CHECK_THROWS_AS(resolve_bidding(a, Configuration{v0, 2}, Action{1, v2}, Action{0, v0}),
                  illegal_bid_error);
  // Cons starred bid while Pres holds the advantage.
  CHECK_THROWS_AS(resolve_bidding(a, Configuration{v0, 1}, Action{0, v2}, Action{1, v0}),
                  illegal_bid_error);
}

TEST_CASE("conservation across every legal bidding round, k <= 3") {
  for (long long k = 0; k <= 3; ++k) {
    Arena a(k);
    a.add_edge("x", "y", 1);
    a.add_edge("y", "x", -1);
    a.add_edge("x", "x", 0);
    a.add_edge("y", "y", 0);
    int x = a.index_of("x"), y = a.index_of("y");
    for (Ord B = 0; B <= a.max_budget(); ++B) {
      Ord cons_b = cons_budget(k, B);
      for (Ord pb = 0; pb <= B; ++pb) {
        if (!legal_bid(pb, B)) continue;
        for (Ord cb = 0; cb <= cons_b; ++cb) {
          if (!legal_bid(cb, cons_b)) continue;
          StepResult r = resolve_bidding(a, Configuration{x, B}, Action{pb, y}, Action{cb, x});
          Ord np = r.next.pres_budget;
          Ord nc = cons_budget(k, np);
          CHECK(np + nc == 2 * k + 1);                     // total conserved
          CHECK(starred(np) != starred(nc));               // one advantage holder
          // The winner pays its bid to the loser.
          if (r.winner == Player::Pres) CHECK(np == B - pb);
          else CHECK(np == B + cb);
        }
      }
    }
  }
}

TEST_CASE("trump minimality by brute force, k <= 4") {
  for (long long k = 0; k <= 4; ++k) {
    Arena a(k);
    a.add_edge("x", "y", 0);
    a.add_edge("y", "x", 0);
    a.add_edge("x", "x", 0);
    a.add_edge("y", "y", 0);
    int x = a.index_of("x"), y = a.index_of("y");
    for (Ord B = 0; B <= a.max_budget(); ++B) {
      Ord cons_b = cons_budget(k, B);
      for (Ord pb = 0; pb <= B; ++pb) {
        if (!legal_bid(pb, B)) continue;
        Ord least_win = -1;
        for (Ord cb = 0; cb <= cons_b; ++cb) {
          if (!legal_bid(cb, cons_b)) continue;
          StepResult r = resolve_bidding(a, Configuration{x, B}, Action{pb, y}, Action{cb, x});
          if (r.winner == Player::Cons) {
            least_win = cb;
            break;
          }
        }
        Ord t = trump(B, pb);
        if (least_win >= 0) CHECK(t == least_win);
        else CHECK(t > cons_b);  // unaffordable: no winning counter-bid exists
      }
    }
  }
}

TEST_CASE("budget text round trip") {
  CHECK(format_budget(0) == "0");
  CHECK(format_budget(1) == "0*");
  CHECK(format_budget(7) == "3*");
  CHECK(parse_budget("3*") == 7);
  CHECK(parse_budget("10") == 20);
  for (Ord o = 0; o <= 30; ++o) CHECK(parse_budget(format_budget(o)) == o);
  CHECK_THROWS(parse_budget("abc"));
  CHECK_THROWS(parse_budget("-1"));
  CHECK_THROWS(parse_budget(""));
}
