#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "bidgame/budget.hpp"

namespace bidgame {

struct Edge {
  int to = 0;
  long long weight = 0;
};

struct arena_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weighted directed game graph with a total bidding budget k.  Vertices are
// interned to dense indices; every vertex needs at least one successor.
class Arena {
 public:
  Arena() = default;
  explicit Arena(long long k) : k_(k) {
    if (k < 0) throw arena_error("total budget must be nonnegative");
  }

  int add_vertex(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, (int)names_.size());
    if (inserted) {
      names_.push_back(name);
      out_.emplace_back();
    }
    return it->second;
  }

  void add_edge(int from, int to, long long weight) {
    check_vertex(from);
    check_vertex(to);
    for (const Edge& e : out_[from])
      if (e.to == to) throw arena_error("duplicate edge " + names_[from] + " -> " + names_[to]);
    out_[from].push_back(Edge{to, weight});
    if (std::abs(weight) > max_weight_) max_weight_ = std::abs(weight);
  }

  void add_edge(const std::string& from, const std::string& to, long long weight) {
    add_edge(add_vertex(from), add_vertex(to), weight);
  }

  void validate() const {
    if (names_.empty()) throw arena_error("arena has no vertices");
    for (size_t v = 0; v < out_.size(); ++v)
      if (out_[v].empty()) throw arena_error("vertex " + names_[v] + " has no outgoing edge");
  }

  int num_vertices() const { return (int)names_.size(); }
  long long k() const { return k_; }
  long long max_weight() const { return max_weight_; }       // W
  Ord budget_count() const { return 2 * k_ + 2; }            // ordinals 0..2k+1
  Ord max_budget() const { return 2 * k_ + 1; }              // ord(k*)
  // Any finite energy requirement is at most (#configurations)*W: a play
  // draining more than that must repeat a configuration inside a negative
  // cycle.  Values above this are cut to +inf by the fixed-point iteration.
  long long trim_bound() const { return (long long)num_vertices() * budget_count() * max_weight_; }

  const std::vector<Edge>& neighbors(int v) const { return out_[v]; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw arena_error("unknown vertex " + name);
    return it->second;
  }

  bool has_edge(int from, int to) const {
    for (const Edge& e : out_[from])
      if (e.to == to) return true;
    return false;
  }

  long long weight(int from, int to) const {
    for (const Edge& e : out_[from])
      if (e.to == to) return e.weight;
    throw arena_error("no edge " + names_[from] + " -> " + names_[to]);
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= (int)names_.size()) throw arena_error("vertex index out of range");
  }

  long long k_ = 0;
  long long max_weight_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Edge>> out_;
  std::map<std::string, int> index_;
};

struct Configuration {
  int vertex = 0;
  Ord pres_budget = 0;  // ordinal; Cons holds 2k+1 - pres_budget

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct Action {
  Ord bid = 0;  // ordinal
  int target = 0;

  friend bool operator==(const Action&, const Action&) = default;
};

enum class Player { Pres, Cons };

inline const char* to_string(Player p) { return p == Player::Pres ? "pres" : "cons"; }

struct StepResult {
  Configuration next;
  Player winner = Player::Pres;
  long long weight = 0;
};

// One auction round.  Strictly higher bid ordinal wins; equal ordinals go to
// the player not holding the advantage (the holder declined to use it).
// The winner pays their bid to the loser and moves the token.
StepResult resolve_bidding(const Arena& arena, const Configuration& cfg, const Action& pres,
                           const Action& cons);

}  // namespace bidgame
