#include "bidgame/gamefile.hpp"

#include "json.hpp"

namespace bidgame {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what());
  }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok |= it.key() == k;
    if (!ok) throw parse_error("unknown field: " + it.key());
  }
}

}  // namespace

Arena parse_game(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw parse_error("top level must be an object");
  reject_unknown(doc, {"vertices", "edges", "total_budget"});
  if (!doc.contains("vertices") || !doc.contains("edges") || !doc.contains("total_budget"))
    throw parse_error("expected fields: vertices, edges, total_budget");
  if (!doc["total_budget"].is_number_integer() || doc["total_budget"].get<long long>() < 0)
    throw parse_error("total_budget must be a nonnegative integer");

  Arena arena(doc["total_budget"].get<long long>());
  if (!doc["vertices"].is_array() || doc["vertices"].empty())
    throw parse_error("vertices must be a nonempty array");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw parse_error("vertex names must be strings");
    arena.add_vertex(v.get<std::string>());
  }
  if (!doc["edges"].is_array()) throw parse_error("edges must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw parse_error("edges must be objects");
    reject_unknown(e, {"from", "to", "weight"});
    if (!e.contains("from") || !e.contains("to") || !e.contains("weight"))
      throw parse_error("edge needs from, to, weight");
    if (!e["weight"].is_number_integer()) throw parse_error("edge weight must be an integer");
    try {
      arena.add_edge(arena.index_of(e["from"].get<std::string>()),
                     arena.index_of(e["to"].get<std::string>()), e["weight"].get<long long>());
    } catch (const arena_error& err) {
      throw parse_error(err.what());
    }
  }
  try {
    arena.validate();
  } catch (const arena_error& err) {
    throw parse_error(err.what());
  }
  return arena;
}

std::string serialize_game(const Arena& arena) {
  json doc;
  doc["vertices"] = arena.names();
  doc["edges"] = json::array();
  for (int v = 0; v < arena.num_vertices(); ++v)
    for (const Edge& e : arena.neighbors(v))
      doc["edges"].push_back(
          {{"from", arena.name(v)}, {"to", arena.name(e.to)}, {"weight", e.weight}});
  doc["total_budget"] = arena.k();
  return doc.dump(2) + "\n";
}

ThresholdMap parse_thresholds(const std::string& text, const Arena& arena) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw parse_error("top level must be an object");
  reject_unknown(doc, {"thresholds"});
  if (!doc.contains("thresholds") || !doc["thresholds"].is_object())
    throw parse_error("expected a thresholds object");

  ThresholdMap T;
  T.k = arena.k();
  T.values.assign(arena.num_vertices(), -1);
  for (auto it = doc["thresholds"].begin(); it != doc["thresholds"].end(); ++it) {
    int v;
    try {
      v = arena.index_of(it.key());
    } catch (const arena_error& e) {
      throw parse_error(e.what());
    }
    if (!it.value().is_string()) throw parse_error("threshold values must be strings");
    std::string s = it.value().get<std::string>();
    Ord o;
    if (s == "none") {
      o = T.top();
    } else {
      try {
        o = parse_budget(s);
      } catch (const illegal_bid_error& e) {
        throw parse_error(e.what());
      }
      if (o > arena.max_budget()) throw parse_error("threshold exceeds total budget: " + s);
    }
    T.values[v] = o;
  }
  for (int v = 0; v < arena.num_vertices(); ++v)
    if (T.values[v] < 0) throw parse_error("missing threshold for vertex " + arena.name(v));
  return T;
}

std::string serialize_thresholds(const ThresholdMap& T, const Arena& arena) {
  json doc;
  doc["thresholds"] = json::object();
  for (int v = 0; v < arena.num_vertices(); ++v)
    doc["thresholds"][arena.name(v)] = format_threshold(T, v);
  return doc.dump(2) + "\n";
}

std::string format_energy(long long e) { return is_inf(e) ? "+inf" : std::to_string(e); }

std::string format_threshold(const ThresholdMap& T, int v) {
  return T.is_top(v) ? "none" : format_budget(T.at(v));
}

}  // namespace bidgame
