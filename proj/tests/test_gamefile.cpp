#include <fstream>
#include <sstream>

#include "bidgame/gamefile.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace bidgame;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GAME_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parsing the shipped documents") {
  Arena f1 = parse_game(slurp("fig1.game"));
  CHECK(f1.num_vertices() == 3);
  CHECK(f1.k() == 1);
  CHECK(f1.max_weight() == 5);
  CHECK(f1.weight(f1.index_of("v0"), f1.index_of("v1")) == -2);

  Arena f2 = parse_game(slurp("fig2.game"));
  CHECK(f2.num_vertices() == 3);
  CHECK(f2.k() == 5);
  CHECK(f2.max_weight() == 3);
}

TEST_CASE("parse errors carry useful context") {
  CHECK_THROWS_AS(parse_game("not json"), parse_error);
  CHECK_THROWS_AS(parse_game(R"({"vertices": [], "edges": [], "total_budget": 1})"),
                  parse_error);  // no vertices
  CHECK_THROWS_AS(
      parse_game(R"({"vertices": ["a"], "edges": [], "total_budget": 1})"),
      parse_error);  // vertex without an outgoing edge
  CHECK_THROWS_AS(
      parse_game(
          R"({"vertices": ["a"], "edges": [{"from": "a", "to": "a", "weight": 0}], "total_budget": -1})"),
      parse_error);  // negative total budget
  CHECK_THROWS_AS(
      parse_game(
          R"({"vertices": ["a"], "edges": [{"from": "a", "to": "a", "weight": 0}, {"from": "a", "to": "a", "weight": 1}], "total_budget": 1})"),
      parse_error);  // duplicate edge
  CHECK_THROWS_AS(
      parse_game(
          R"({"vertices": ["a"], "edges": [{"from": "a", "to": "a", "weight": 0}], "total_budget": 1, "extra": 1})"),
      parse_error);  // unknown field
  CHECK_THROWS_AS(
      parse_game(
          R"({"vertices": ["a"], "edges": [{"from": "a", "to": "b", "weight": 0}], "total_budget": 1})"),
      parse_error);  // edge to an undeclared vertex
}

TEST_CASE("game document round trip") {
  std::string first = serialize_game(parse_game(slurp("fig1.game")));
  std::string second = serialize_game(parse_game(first));
  CHECK(first == second);
  Arena again = parse_game(first);
  CHECK(again.num_vertices() == 3);
  CHECK(again.k() == 1);
}

TEST_CASE("threshold certificate round trip") {
  Arena a = parse_game(slurp("fig2.game"));
  ThresholdMap T;
  T.k = a.k();
  T.values = {2, 5, T.top()};
  std::string doc = serialize_thresholds(T, a);
  ThresholdMap back = parse_thresholds(doc, a);
  CHECK(back == T);
  CHECK(doc.find("none") != std::string::npos);  // the unwinnable sentinel

  CHECK_THROWS_AS(parse_thresholds(R"({"thresholds": {"v1": "0"}})", a), parse_error);
  CHECK_THROWS_AS(parse_thresholds(R"({"thresholds": {"v1": "0", "v2": "0", "t": "0", "x": "0"}})", a),
                  parse_error);
}

TEST_CASE("value formatting") {
  CHECK(format_energy(0) == "0");
  CHECK(format_energy(42) == "42");
  CHECK(format_energy(INF_ENERGY) == "+inf");

  Arena a = parse_game(slurp("selfloop-neg.game"));
  ThresholdMap T;
  T.k = a.k();
  T.values = {T.top()};
  CHECK(format_threshold(T, 0) == "none");
  T.values = {3};
  CHECK(format_threshold(T, 0) == "1*");
}
