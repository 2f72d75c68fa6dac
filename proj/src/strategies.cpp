#include "bidgame/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidgame {

PositionalStrategy sigma_agn(const Arena& arena, const FixedPointResult& fp, const ThresholdMap& T,
                             const PositionalStrategy& vi) {
  (void)fp;
  PositionalStrategy s(arena.num_vertices(), arena.budget_count());
  for (int v = 0; v < arena.num_vertices(); ++v) {
    if (T.is_top(v)) continue;
    for (Ord b = T.at(v); b <= arena.max_budget(); ++b) {
      Configuration trimmed{v, relativebud(T, v, b)};
      s.set(v, b, vi.at(trimmed));
    }
  }
  return s;
}

long long sigma_agn_energy_bound(const Arena& arena, const FixedPointResult& fp,
                                 const ThresholdMap& T) {
  long long worst = 0;
  for (int v = 0; v < arena.num_vertices(); ++v)
    if (!T.is_top(v)) worst = std::max(worst, fp.energy.at(v, T.at(v)));
  return (arena.k() + 1) * (arena.max_weight() + worst);
}

// ---- TauFinite ----

TauFinite::TauFinite(const Arena& arena, long long n)
    : arena_(&arena), n_(n), tables_(mu_n_tables(arena, n)) {}

bool TauFinite::cons_wins(int v, long long e, long long m, Ord pres_budget) const {
  if (e < 0) return true;
  if (m <= 0) return false;
  return e < tables_[m].at(v, pres_budget);
}

Action TauFinite::cons_action(int v, long long e, long long m, Ord pres_budget) const {
  const Arena& arena = *arena_;
  Ord cons_bud = cons_budget(arena.k(), pres_budget);
  std::vector<int> targets;
  for (const Edge& edge : arena.neighbors(v)) targets.push_back(edge.to);
  std::sort(targets.begin(), targets.end());

  for (Ord c = 0; c <= cons_bud; ++c) {
    if (!legal_bid(c, cons_bud)) continue;
    for (int u : targets) {
      bool good = true;
      for (Ord b = 0; b <= pres_budget && good; ++b) {
        if (!legal_bid(b, pres_budget)) continue;
        bool pres_takes = b != c ? b > c : !starred(pres_budget);
        if (pres_takes) {
          Ord nb = pres_budget - b;
          for (const Edge& edge : arena.neighbors(v)) {
            long long e2 = std::max(e + edge.weight, -1LL);
            if (!cons_wins(edge.to, e2, m - 1, nb)) {
              good = false;
              break;
            }
          }
        } else {
          long long e2 = std::max(e + arena.weight(v, u), -1LL);
          if (!cons_wins(u, e2, m - 1, pres_budget + c)) good = false;
        }
      }
      if (good) return Action{c, u};
    }
  }
  throw std::logic_error("no uniformly winning reply at a losing-for-Pres state");
}

// ---- TauCycleSkip ----

TauCycleSkip::TauCycleSkip(const Arena& arena, const FixedPointResult& fp,
                           const Configuration& init, long long initial_energy)
    : arena_(&arena),
      tau_(arena, [&] {
        // Deep enough that surviving the horizon needs more than the given
        // energy; when no such horizon exists (Pres actually wins) settle for
        // the horizon at which the tables stop changing and play best effort.
        long long cap = fp.iterations + fp.trim_bound + 2;
        EnergyTable cur = mu_zero(arena);
        for (long long n = 1; n <= cap; ++n) {
          EnergyTable next = mu_step(arena, cur);
          if (next.at(init.vertex, init.pres_budget) > initial_energy) return n;
          if (next == cur) return n;
          cur = std::move(next);
        }
        return cap;
      }()) {
  long long e0 = std::min(initial_energy, tau_.mu(init.vertex, init.pres_budget, tau_.horizon()) - 1);
  sim_.push_back(SimEntry{init, e0});
}

Action TauCycleSkip::decide(const Configuration& cfg) {
  long long m = tau_.horizon() - ((long long)sim_.size() - 1);
  if (m <= 0 || sim_.back().energy < 0 ||
      !tau_.cons_wins(cfg.vertex, sim_.back().energy, m, cfg.pres_budget)) {
    // Only reachable in best-effort mode (the start was actually winnable
    // for Pres); start a fresh simulation here.
    long long e0 = tau_.mu(cfg.vertex, cfg.pres_budget, tau_.horizon()) - 1;
    sim_.assign(1, SimEntry{cfg, e0});
    m = tau_.horizon();
  }
  if (sim_.back().energy < 0) {
    return Action{0, arena_->neighbors(cfg.vertex).front().to};
  }
  return tau_.cons_action(cfg.vertex, sim_.back().energy, m, cfg.pres_budget);
}

void TauCycleSkip::observe(const StepRecord& step) {
  long long e2 = std::max(sim_.back().energy + step.weight, -1LL);
  sim_.push_back(SimEntry{step.next, e2});
  // Excise the innermost closed cycle with a net energy drop: forget the
  // loop, keep pressing from its first configuration.
  for (size_t j = sim_.size() - 1; j-- > 0;) {
    if (sim_[j].cfg == sim_.back().cfg && sim_.back().energy < sim_[j].energy) {
      sim_.resize(j + 1);
      break;
    }
  }
}

std::string TauCycleSkip::fingerprint() const {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&h](unsigned long long x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const SimEntry& s : sim_) {
    mix((unsigned long long)s.cfg.vertex);
    mix((unsigned long long)s.cfg.pres_budget);
    mix((unsigned long long)(s.energy + 1));
  }
  return std::to_string(h);
}

// ---- Cons budget-agnostic machinery ----

long long p_of_e(const Arena& arena, const ThresholdMap& th_prime, int v, Ord cons_bud,
                 long long e) {
  Ord rb = relativebud(th_prime, v, cons_bud);
  Ord pres = cons_budget(arena.k(), rb);
  long long cap = (e + 2) * std::max(arena.trim_bound(), 1LL) + 2;
  EnergyTable cur = mu_zero(arena);
  for (long long n = 0; n <= cap; ++n) {
    if (n > 0) cur = mu_step(arena, cur);
    if (cur.at(v, pres) - 1 >= e) return n;
  }
  throw std::logic_error("consumable-energy horizon search exceeded its bound");
}

long long psi_bound(const Arena& arena, const ThresholdMap& th_prime, int v, Ord cons_bud,
                    long long e) {
  long long total = 0;
  long long cur = e;
  for (long long m = 0; m <= arena.k(); ++m) {
    long long p = p_of_e(arena, th_prime, v, cons_bud, cur);
    total += p;
    cur += arena.max_weight() * p;
  }
  return total;
}

TauAgn::TauAgn(const Arena& arena, const ThresholdMap& th_prime)
    : arena_(&arena), th_prime_(th_prime) {
  floor_energy_ = arena.trim_bound();
  reset_energy_ = 2 * floor_energy_ + 1;
  sim_energy_ = reset_energy_;
}

const TauFinite& TauAgn::tau_for(long long n) {
  while ((long long)cache_.size() <= n) cache_.emplace_back(*arena_, (long long)cache_.size());
  return cache_[n];
}

Action TauAgn::decide_at(int vertex, Ord trimmed_cons) {
  long long n = p_of_e(*arena_, th_prime_, vertex, trimmed_cons, sim_energy_);
  const TauFinite& tau = tau_for(n);
  return tau.cons_action(vertex, sim_energy_, n, cons_budget(arena_->k(), trimmed_cons));
}

Action TauAgn::decide(const Configuration& cfg) {
  int v = cfg.vertex;
  Ord cons_bud = cons_budget(arena_->k(), cfg.pres_budget);
  if (th_prime_.is_top(v) || cons_bud < th_prime_.at(v))
    throw below_threshold_error("Cons budget below threshold at " + arena_->name(v));
  Ord rb = relativebud(th_prime_, v, cons_bud);
  if (sim_energy_ <= floor_energy_) {
    sim_.clear();
    sim_energy_ = reset_energy_;
  }
  if (sim_.empty()) sim_.push_back(SimEntry{v, rb, sim_energy_});
  return decide_at(v, rb);
}

void TauAgn::observe(const StepRecord& step) {
  if (sim_.empty()) return;
  int v2 = step.next.vertex;
  Ord cons_bud = cons_budget(arena_->k(), step.next.pres_budget);
  Ord rb2 = cons_bud >= th_prime_.at(v2) && !th_prime_.is_top(v2)
                ? relativebud(th_prime_, v2, cons_bud)
                : cons_bud;
  sim_energy_ = std::max(sim_energy_ + step.weight, -1LL);
  sim_.push_back(SimEntry{v2, rb2, sim_energy_});
  for (size_t j = sim_.size() - 1; j-- > 0;) {
    if (sim_[j].vertex == sim_.back().vertex && sim_[j].trimmed == sim_.back().trimmed &&
        sim_.back().energy < sim_[j].energy) {
      sim_.resize(j + 1);
      sim_energy_ = sim_.back().energy;
      break;
    }
  }
}

std::string TauAgn::fingerprint() const {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&h](unsigned long long x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const SimEntry& s : sim_) {
    mix((unsigned long long)s.vertex);
    mix((unsigned long long)s.trimmed);
    mix((unsigned long long)(s.energy + 1));
  }
  return std::to_string(h);
}

// ---- Opponents for simulation ----

PositionalStrategy cons_best_response(const Arena& arena, const FixedPointResult& fp,
                                      const PositionalStrategy& vi) {
  PositionalStrategy s(arena.num_vertices(), arena.budget_count());
  for (int v = 0; v < arena.num_vertices(); ++v) {
    std::vector<int> targets;
    for (const Edge& e : arena.neighbors(v)) targets.push_back(e.to);
    std::sort(targets.begin(), targets.end());
    for (Ord b = 0; b <= arena.max_budget(); ++b) {
      if (!vi.defined(v, b)) continue;
      Ord pres_bid = vi.at(Configuration{v, b}).bid;
      BidOutcome out = bid_outcome(arena, fp.energy, v, b, pres_bid);
      if (out.cons_can_trump && out.e_lose > out.e_win) {
        Ord t = trump(b, pres_bid);
        int best = targets.front();
        long long best_need = -1;
        for (int u : targets) {
          long long need =
              std::max(sub_weight(fp.energy.at(u, b + t), arena.weight(v, u)), 0LL);
          if (need > best_need) {
            best_need = need;
            best = u;
          }
        }
        s.set(v, b, Action{t, best});
      } else {
        // Concede: bid 0; if the round is still won (advantage tie), head for
        // the most demanding neighbor at the unchanged budget.
        int best = targets.front();
        long long best_need = -1;
        for (int u : targets) {
          long long need = std::max(sub_weight(fp.energy.at(u, b), arena.weight(v, u)), 0LL);
          if (need > best_need) {
            best_need = need;
            best = u;
          }
        }
        s.set(v, b, Action{0, best});
      }
    }
  }
  return s;
}

Action RandomCons::decide(const Configuration& cfg) {
  Ord cons_bud = cons_budget(k_, cfg.pres_budget);
  std::vector<Ord> bids;
  for (Ord c = 0; c <= cons_bud; ++c)
    if (legal_bid(c, cons_bud)) bids.push_back(c);
  const auto& nb = arena_->neighbors(cfg.vertex);
  std::uniform_int_distribution<size_t> pick_bid(0, bids.size() - 1);
  std::uniform_int_distribution<size_t> pick_tgt(0, nb.size() - 1);
  ++draws_;
  return Action{bids[pick_bid(rng_)], nb[pick_tgt(rng_)].to};
}

}  // namespace bidgame
