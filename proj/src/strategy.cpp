#include "ncgr1/strategy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "ncgr1/game_io.hpp"

namespace ncgr1 {

using nlohmann::json;

moded_state memoryless_controller::sys_move(const moded_state& at) const {
  if (at.state >= s_.choice.size() || !s_.choice[at.state])
    throw strategy_error("memoryless strategy undefined at state " + std::to_string(at.state));
  return {*s_.choice[at.state], {}};
}

mealy_strategy materialize(const game_graph& g, const controller& c, const moded_state& init) {
  mealy_strategy out;
  out.n = c.goal_modes();
  out.m = c.assumption_modes();
  out.init = init;
  std::set<moded_state> seen{init};
  std::deque<moded_state> queue{init};
  auto visit = [&](const moded_state& v) {
    if (seen.insert(v).second) queue.push_back(v);
  };
  while (!queue.empty()) {
    const moded_state v = queue.front();
    queue.pop_front();
    if (g.owner(v.state) == player::sys) {
      const moded_state next = c.sys_move(v);
      bool edge = false;
      for (state_id t : g.successors(v.state)) edge = edge || t == next.state;
      if (!edge)
        throw strategy_error("controller moved along a non-edge " + g.name(v.state) + " -> " +
                             describe_state(g, next.state));
      out.sys_moves.emplace(v, next);
      visit(next);
    } else {
      for (state_id t : g.successors(v.state)) {
        const mode m = c.env_update(v, t);
        out.env_updates.emplace(std::make_pair(v, t), m);
        visit({t, m});
      }
    }
  }
  return out;
}

namespace {

struct move_row {
  state_id state;
  mode at;
  state_id to;
  mode next;
  auto key() const { return std::tie(state, at, to); }
};

std::vector<move_row> rows_of(const mealy_strategy& s) {
  std::vector<move_row> rows;
  for (const auto& [from, to] : s.sys_moves) rows.push_back({from.state, from.m, to.state, to.m});
  for (const auto& [key, m] : s.env_updates) rows.push_back({key.first.state, key.first.m, key.second, m});
  std::sort(rows.begin(), rows.end(), [](const move_row& l, const move_row& r) { return l.key() < r.key(); });
  return rows;
}

json row_json(const game_graph& g, const move_row& r) {
  json o;
  o["state"] = g.name(r.state);
  o["a"] = r.at.a + 1;
  o["b"] = r.at.b + 1;
  o["to"] = g.name(r.to);
  o["a2"] = r.next.a + 1;
  o["b2"] = r.next.b + 1;
  return o;
}

[[noreturn]] void fail(const std::string& msg) { throw strategy_format_error(msg); }

state_id state_ref(const game_graph& g, const json& v, const char* where) {
  if (!v.is_string()) fail(std::string(where) + " must be a state id string");
  auto q = g.find(v.get<std::string>());
  if (!q) fail(std::string(where) + " references unknown state '" + v.get<std::string>() + "'");
  return *q;
}

std::uint32_t index_ref(const json& obj, const char* key, std::size_t bound) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) fail(std::string("missing integer \"") + key + "\"");
  const auto v = it->get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    fail(std::string("\"") + key + "\" = " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::uint32_t>(v - 1);
}

bool is_edge(const game_graph& g, state_id s, state_id t) {
  for (state_id x : g.successors(s))
    if (x == t) return true;
  return false;
}

}  // namespace

json strategy_to_json(const game_graph& g, const mealy_strategy& s) {
  json doc;
  doc["kind"] = "moded";
  doc["n"] = s.n;
  doc["m"] = s.m;
  doc["init"] = {{"state", g.name(s.init.state)}, {"a", s.init.m.a + 1}, {"b", s.init.m.b + 1}};
  json moves = json::array();
  for (const auto& r : rows_of(s)) moves.push_back(row_json(g, r));
  doc["moves"] = std::move(moves);
  return doc;
}

std::string serialize_strategy(const game_graph& g, const mealy_strategy& s) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"moded\",\n  \"n\": " << s.n << ",\n  \"m\": " << s.m << ",\n  \"init\": "
     << json{{"state", g.name(s.init.state)}, {"a", s.init.m.a + 1}, {"b", s.init.m.b + 1}}.dump()
     << ",\n  \"moves\": [";
  bool first = true;
  for (const auto& r : rows_of(s)) {
    os << (first ? "\n    " : ",\n    ") << row_json(g, r).dump();
    first = false;
  }
  os << (first ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

mealy_strategy strategy_from_json(const game_graph& g, const json& doc) {
  if (!doc.is_object()) fail("strategy document must be a JSON object");
  if (doc.value("kind", std::string()) != "moded") fail("strategy kind must be \"moded\"");
  mealy_strategy s;
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("m") || !doc["m"].is_number_unsigned())
    fail("strategy needs non-negative integers \"n\" and \"m\"");
  s.n = doc["n"].get<std::size_t>();
  s.m = doc["m"].get<std::size_t>();
  if (s.n == 0 || s.m == 0) fail("mode counts must be at least 1");
  if (!doc.contains("init") || !doc["init"].is_object()) fail("strategy has no \"init\" object");
  const json& init = doc["init"];
  if (!init.contains("state")) fail("init has no \"state\"");
  s.init = {state_ref(g, init["state"], "init"), {index_ref(init, "a", s.n), index_ref(init, "b", s.m)}};
  if (s.init.state != g.init()) fail("strategy starts at " + g.name(s.init.state) + ", game starts at " + g.name(g.init()));
  if (!doc.contains("moves") || !doc["moves"].is_array()) fail("strategy has no \"moves\" array");
  for (const json& mv : doc["moves"]) {
    if (!mv.is_object() || !mv.contains("state") || !mv.contains("to")) fail("each move needs \"state\" and \"to\"");
    const state_id from = state_ref(g, mv["state"], "move");
    const state_id to = state_ref(g, mv["to"], "move target");
    const moded_state at{from, {index_ref(mv, "a", s.n), index_ref(mv, "b", s.m)}};
    const mode next{index_ref(mv, "a2", s.n), index_ref(mv, "b2", s.m)};
    if (!is_edge(g, from, to)) fail("move " + g.name(from) + " -> " + g.name(to) + " is not an edge");
    if (g.owner(from) == player::sys) {
      if (!s.sys_moves.emplace(at, moded_state{to, next}).second)
        fail("two moves for system state " + g.name(from) + " in one mode");
    } else if (!s.env_updates.emplace(std::make_pair(at, to), next).second) {
      fail("two mode updates for " + g.name(from) + " -> " + g.name(to) + " in one mode");
    }
  }
  return s;
}

mealy_strategy parse_strategy(const game_graph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("malformed strategy file at " + describe_json_error(text, e));
  }
  return strategy_from_json(g, doc);
}

}  // namespace ncgr1
