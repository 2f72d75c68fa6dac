#pragma once

#include <array>
#include <string>
#include <vector>

#include "bidgame/strategies.hpp"

namespace bidgame {

struct invalid_certificate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side { Pres, Cons };

// Turn-based energy game built from a candidate threshold map.  Chooser
// vertices belong to the side whose map T is: at each tracked budget copy it
// commits to a (bid, target) pair — the planned bid, or at starred copies
// also its plain predecessor, which keeps the advantage in hand.  Responder
// vertices belong to the opponent, who either concedes or wins the bidding
// with any affordable legal counter-bid.  A landing above the two tracked
// copies is a spare-change gain for the chooser (restartable, hence a sink in
// its favor); a landing below the target's tracked copies is a loss.
struct TurnBasedGame {
  enum class Owner { Min, Max };  // Min keeps energy nonnegative

  struct Node {
    Owner owner = Owner::Min;
    std::string label;
    std::vector<std::pair<int, long long>> succ;  // (node, weight)
    Ord bid = -1;   // responder nodes: the chooser's committed bid
    int move = -1;  // responder nodes: the chooser's target on a won bidding
  };

  Side side = Side::Pres;
  std::vector<Node> nodes;
  long long max_weight = 0;

  // chooser_node[v][i]: node for <v, T(v)> (i=0) and <v, succ(T(v))> (i=1);
  // -1 when that budget copy cannot occur.
  std::vector<std::array<int, 2>> chooser_node;
  std::vector<int> sink_node;  // per original vertex: spare-change sink
  int dead_node = -1;          // shared sink: chooser fell below a threshold

  long long trim_bound() const { return (long long)nodes.size() * max_weight; }
};

TurnBasedGame build_turn_based(const Arena& arena, const ThresholdMap& T, Side side);

// Classical turn-based energy value iteration with trimming: minimal
// sufficient initial energy for the Min player per node, +inf above bound.
std::vector<long long> solve_turn_based(const TurnBasedGame& tbg);

struct CertifyResult {
  bool accepted = false;
  std::string witness;  // empty on ACCEPT
};

// ACCEPT iff T passes the average check, the T-side game is winnable at every
// tracked budget of every vertex with T(v) below top, and the complementary
// game is lost everywhere the complement is below top.  ACCEPT implies T is
// exactly the threshold map.
CertifyResult certify(const Arena& arena, const ThresholdMap& T);

// Is Th(v) >= level?  Computes thresholds deterministically and re-validates
// them through certify as a self-check.
bool decide_threshold(const Arena& arena, int v, Ord level);

// Lift a memoryless winning choice in the turn-based game to a positional
// budget-agnostic bidding strategy: bid the planned bid, move to the
// turn-based pick at the trimmed budget.
PositionalStrategy extract_positional(const Arena& arena, const ThresholdMap& T,
                                      const TurnBasedGame& tbg,
                                      const std::vector<long long>& solution);

}  // namespace bidgame
