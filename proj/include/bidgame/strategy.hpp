#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bidgame/arena.hpp"

namespace bidgame {

struct StepRecord {
  Configuration cfg;
  Action pres;
  Action cons;
  Player winner = Player::Pres;
  long long weight = 0;
  long long energy_after = 0;
  Configuration next;
};

// A decision rule producing (bid, target) per configuration.  Memory-carrying
// strategies update through observe(); an instance must not be shared across
// concurrent plays.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual Action decide(const Configuration& cfg) = 0;

  // Called once per resolved round, after both players moved.
  virtual void observe(const StepRecord&) {}

  // Opaque memory snapshot for cycle detection; empty means stateless.
  virtual std::string fingerprint() const { return {}; }
};

// Lookup-table strategy over (vertex, budget ordinal).
class PositionalStrategy : public Strategy {
 public:
  PositionalStrategy() = default;
  PositionalStrategy(int num_vertices, Ord budget_count)
      : budget_count_(budget_count), table_((size_t)num_vertices * budget_count) {}

  void set(int v, Ord b, Action a) { table_[(size_t)v * budget_count_ + b] = a; }

  bool defined(int v, Ord b) const { return table_[(size_t)v * budget_count_ + b].has_value(); }

  Action at(const Configuration& cfg) const {
    const auto& slot = table_[(size_t)cfg.vertex * budget_count_ + cfg.pres_budget];
    if (!slot)
      throw strategy_undefined_error("strategy undefined at vertex index " +
                                     std::to_string(cfg.vertex) + ", budget ordinal " +
                                     std::to_string(cfg.pres_budget));
    return *slot;
  }

  Action decide(const Configuration& cfg) override { return at(cfg); }

 private:
  Ord budget_count_ = 0;
  std::vector<std::optional<Action>> table_;
};

}  // namespace bidgame
