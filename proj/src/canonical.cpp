#include "ncgr1/canonical.hpp"

#include <unordered_map>

namespace ncgr1 {

game_file make_game(const std::vector<std::pair<std::string, int>>& states,
                    const std::vector<std::pair<std::string, std::string>>& edges, const std::string& init,
                    const std::vector<std::vector<std::string>>& assumptions,
                    const std::vector<std::vector<std::string>>& guarantees) {
  nlohmann::json doc;
  doc["states"] = nlohmann::json::array();
  for (const auto& [id, owner] : states) doc["states"].push_back({{"id", id}, {"owner", owner}});
  doc["init"] = init;
  doc["edges"] = nlohmann::json::array();
  for (const auto& [s, t] : edges) doc["edges"].push_back({s, t});
  doc["assumptions"] = assumptions;
  doc["guarantees"] = guarantees;
  return game_from_json(doc);
}

namespace canonical {

game_file ex0() { return make_game({{"a", 0}, {"b", 1}}, {{"a", "b"}, {"b", "a"}}, "a", {{"a"}}, {{"b"}}); }

game_file ex1() {
  return make_game({{"a0", 0}, {"a1", 0}, {"b0", 1}, {"b1", 1}},
                   {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b1"}, {"b0", "a0"}, {"b1", "a0"}, {"b1", "a1"}}, "a0",
                   {{"a1"}}, {{"b0"}});
}

game_file trap_pair() {
  return make_game({{"q0", 0},
                    {"q1", 1},
                    {"q2", 0},
                    {"q3", 1},
                    {"q4", 0},
                    {"q5", 1},
                    {"q6", 0},
                    {"q7", 1},
                    {"q8", 0},
                    {"q9", 1}},
                   {{"q0", "q1"},
                    {"q1", "q2"},
                    {"q1", "q8"},
                    {"q2", "q3"},
                    {"q3", "q4"},
                    {"q4", "q5"},
                    {"q5", "q6"},
                    {"q6", "q5"},
                    {"q6", "q7"},
                    {"q7", "q0"},
                    {"q8", "q9"},
                    {"q9", "q8"}},
                   "q0", {{"q0"}}, {{"q4"}});
}

game_file two_by_two() {
  return make_game({{"q0", 0},
                    {"q1", 1},
                    {"q2", 0},
                    {"q3", 1},
                    {"q4", 0},
                    {"q5", 1},
                    {"q6", 1},
                    {"q7", 0},
                    {"q8", 1},
                    {"q9", 0},
                    {"q10", 1}},
                   {{"q0", "q1"},
                    {"q1", "q2"},
                    {"q1", "q9"},
                    {"q2", "q3"},
                    {"q2", "q6"},
                    {"q3", "q4"},
                    {"q4", "q5"},
                    {"q5", "q0"},
                    {"q6", "q7"},
                    {"q6", "q9"},
                    {"q7", "q8"},
                    {"q7", "q5"},
                    {"q8", "q0"},
                    {"q9", "q10"},
                    {"q9", "q5"},
                    {"q10", "q0"}},
                   "q0", {{"q4"}, {"q7", "q9"}}, {{"q3"}, {"q8", "q10"}});
}

game_file conflicting_loop() {
  return make_game({{"q0", 0}, {"q1", 1}, {"q2", 0}, {"q3", 1}, {"q5", 1}},
                   {{"q0", "q1"}, {"q1", "q2"}, {"q2", "q3"}, {"q3", "q2"}, {"q5", "q2"}}, "q0",
                   {{"q5"}}, {{"q3"}});
}

game_file nonconflicting_loop() {
  return make_game(
      {{"q0", 0}, {"q1", 1}, {"q2", 0}, {"q3", 1}, {"q5", 1}},
      {{"q0", "q1"}, {"q1", "q2"}, {"q2", "q3"}, {"q2", "q5"}, {"q3", "q2"}, {"q5", "q2"}}, "q0",
      {{"q5"}}, {{"q3"}});
}

}  // namespace canonical
}  // namespace ncgr1
