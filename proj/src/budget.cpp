#include "bidgame/budget.hpp"

#include <cctype>

namespace bidgame {

std::string format_budget(Ord o) {
  std::string s = std::to_string(o / 2);
  if (starred(o)) s += '*';
  return s;
}

Ord parse_budget(const std::string& text) {
  if (text.empty()) throw illegal_bid_error("empty budget literal");
  std::string digits = text;
  bool adv = false;
  if (digits.back() == '*') {
    adv = true;
    digits.pop_back();
  }
  if (digits.empty()) throw illegal_bid_error("bad budget literal: " + text);
  for (char c : digits)
    if (!std::isdigit((unsigned char)c)) throw illegal_bid_error("bad budget literal: " + text);
  return 2 * std::stoll(digits) + (adv ? 1 : 0);
}

}  // namespace bidgame
