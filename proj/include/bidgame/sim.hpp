#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "bidgame/strategy.hpp"

namespace bidgame {

enum class Outcome { ConsWin, PresSurvived, CycleDetected };

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rational{n, d};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

struct PlayTrace {
  long long initial_energy = 0;
  std::vector<StepRecord> steps;
  Outcome outcome = Outcome::PresSurvived;
  long long cycle_start = -1;   // step index where the detected cycle begins
  long long cycle_period = 0;
};

inline long long default_max_steps(const Arena& a) {
  return 10 * (long long)a.num_vertices() * a.budget_count() * (a.trim_bound() + 1);
}

// Drive both strategies until the energy goes negative (ConsWin), a
// configuration repeats with identical strategy memory (CycleDetected), or
// max_steps elapse (PresSurvived).
PlayTrace run_play(const Arena& arena, const Configuration& init, long long energy, Strategy& pres,
                   Strategy& cons, long long max_steps);

// Exact cycle average; only meaningful for eventually-periodic plays.
Rational mean_payoff_of(const PlayTrace& trace);

// Shift weights to q*w - p: Max guarantees payoff >= p/q in the original
// arena iff Pres has finite energy in the shifted one.
Arena reduce_mean_payoff(const Arena& arena, long long p, long long q);

}  // namespace bidgame
