#include "ncgr1/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ncgr1 {

using nlohmann::json;

std::string describe_json_error(std::string_view text, const json::parse_error& e) {
  std::size_t line = 1, col = 1;
  const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::string what = e.what();
  if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw game_format_error(msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + " has no \"" + key + "\"");
  return *it;
}

std::string as_id(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a state id string");
  return v.get<std::string>();
}

state_id lookup(const std::unordered_map<std::string, state_id>& ids, const std::string& name,
                const std::string& where) {
  auto it = ids.find(name);
  if (it == ids.end()) fail(where + " references unknown state '" + name + "'");
  return it->second;
}

std::vector<state_set> read_sets(const json& doc, const char* key,
                                 const std::unordered_map<std::string, state_id>& ids, std::size_t n) {
  const json& arr = field(doc, key, "game");
  if (!arr.is_array()) fail(std::string("\"") + key + "\" must be an array of state lists");
  std::vector<state_set> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = std::string(key) + " set " + std::to_string(k + 1);
    if (!arr[k].is_array()) fail(where + " must be an array");
    state_set s(n);
    for (const auto& v : arr[k]) s.insert(lookup(ids, as_id(v, where), where));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

game_file game_from_json(const json& doc) {
  if (!doc.is_object()) fail("game document must be a JSON object");
  const json& states = field(doc, "states", "game");
  if (!states.is_array()) fail("\"states\" must be an array");

  std::vector<player> owner;
  std::vector<std::string> names;
  std::unordered_map<std::string, state_id> ids;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const json& st = states[k];
    const std::string where = "state #" + std::to_string(k + 1);
    if (!st.is_object()) fail(where + " must be an object");
    std::string id = as_id(field(st, "id", where), where + " id");
    if (!st.contains("owner")) fail("state '" + id + "' has no owner");
    const json& o = st["owner"];
    if (!o.is_number_integer() || (o.get<int>() != 0 && o.get<int>() != 1))
      fail("state '" + id + "' has owner other than 0 or 1");
    if (!ids.emplace(id, static_cast<state_id>(k)).second) fail("duplicate state id '" + id + "'");
    owner.push_back(o.get<int>() == 0 ? player::env : player::sys);
    names.push_back(std::move(id));
  }
  const std::size_t n = owner.size();

  const state_id init = lookup(ids, as_id(field(doc, "init", "game"), "init"), "init");

  std::vector<std::vector<state_id>> succ(n);
  const json& edges = field(doc, "edges", "game");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) fail("each edge must be a [source, target] pair");
    state_id src = lookup(ids, as_id(e[0], "edge source"), "edge");
    state_id dst = lookup(ids, as_id(e[1], "edge target"), "edge");
    succ[src].push_back(dst);
  }

  game_file out;
  out.graph = game_graph(std::move(owner), std::move(succ), init, std::move(names));
  out.spec.assumptions = read_sets(doc, "assumptions", ids, n);
  out.spec.guarantees = read_sets(doc, "guarantees", ids, n);

  auto violations = validate(out.graph, out.spec);
  if (!violations.empty()) {
    std::string msg = violations.front();
    for (std::size_t i = 1; i < violations.size(); ++i) msg += "; " + violations[i];
    fail(msg);
  }
  return out;
}

game_file parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("malformed game file at " + describe_json_error(text, e));
  }
  return game_from_json(doc);
}

json game_to_json(const game_graph& g, const gr1_spec& s) {
  json doc;
  json states = json::array();
  for (state_id q = 0; q < g.size(); ++q)
    states.push_back({{"id", g.name(q)}, {"owner", g.owner(q) == player::env ? 0 : 1}});
  doc["states"] = std::move(states);
  doc["init"] = g.name(g.init());
  json edges = json::array();
  for (state_id q = 0; q < g.size(); ++q)
    for (state_id t : g.successors(q)) edges.push_back({g.name(q), g.name(t)});
  doc["edges"] = std::move(edges);
  auto sets = [&](const std::vector<state_set>& v) {
    json arr = json::array();
    for (const auto& set : v) {
      json members = json::array();
      set.for_each([&](state_id q) { members.push_back(g.name(q)); });
      arr.push_back(std::move(members));
    }
    return arr;
  };
  doc["assumptions"] = sets(s.assumptions);
  doc["guarantees"] = sets(s.guarantees);
  return doc;
}

std::string serialize_game(const game_graph& g, const gr1_spec& s) {
  auto str = [](const std::string& v) { return json(v).dump(); };
  std::ostringstream os;
  os << "{\n  \"states\": [";
  for (state_id q = 0; q < g.size(); ++q) {
    os << (q == 0 ? "\n" : ",\n") << "    {\"id\": " << str(g.name(q))
       << ", \"owner\": " << (g.owner(q) == player::env ? 0 : 1) << "}";
  }
  os << (g.size() ? "\n  ]" : "]") << ",\n  \"init\": " << str(g.name(g.init())) << ",\n  \"edges\": [";
  bool first = true;
  for (state_id q = 0; q < g.size(); ++q) {
    for (state_id t : g.successors(q)) {
      os << (first ? "\n" : ",\n") << "    [" << str(g.name(q)) << ", " << str(g.name(t)) << "]";
      first = false;
    }
  }
  os << (first ? "]" : "\n  ]");
  auto sets = [&](const char* key, const std::vector<state_set>& v) {
    os << ",\n  \"" << key << "\": [";
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << (k == 0 ? "\n" : ",\n") << "    [";
      bool f = true;
      v[k].for_each([&](state_id q) {
        os << (f ? "" : ", ") << str(g.name(q));
        f = false;
      });
      os << "]";
    }
    os << (v.empty() ? "]" : "\n  ]");
  };
  sets("assumptions", s.assumptions);
  sets("guarantees", s.guarantees);
  os << "\n}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

game_file load_game_file(const std::string& path) { return parse_game(read_text_file(path)); }

}  // namespace ncgr1
