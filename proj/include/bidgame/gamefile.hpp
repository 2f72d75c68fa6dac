#pragma once

#include <string>

#include "bidgame/thresholds.hpp"

namespace bidgame {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Game documents are JSON objects:
//   {"vertices": ["v0", ...],
//    "edges": [{"from": "v0", "to": "v1", "weight": -2}, ...],
//    "total_budget": 5}
// Unknown fields and duplicate edges are rejected.
Arena parse_game(const std::string& text);
std::string serialize_game(const Arena& arena);

// Threshold certificates: {"thresholds": {"v0": "1*", "v1": "none", ...}}
// where "none" stands for the unwinnable sentinel k+1.
ThresholdMap parse_thresholds(const std::string& text, const Arena& arena);
std::string serialize_thresholds(const ThresholdMap& T, const Arena& arena);

std::string format_energy(long long e);  // "+inf" sentinel
std::string format_threshold(const ThresholdMap& T, int v);

}  // namespace bidgame
