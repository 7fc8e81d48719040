#include "ncgr1/game.hpp"

#include <algorithm>

namespace ncgr1 {

game_graph::game_graph(std::vector<player> owner, std::vector<std::vector<state_id>> succ, state_id init,
                       std::vector<std::string> names)
    : owner_(std::move(owner)), succ_(std::move(succ)), names_(std::move(names)), init_(init) {
  const std::size_t n = owner_.size();
  if (succ_.size() != n) throw std::invalid_argument("successor table size differs from state count");
  if (names_.empty()) {
    names_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) names_.push_back(std::to_string(q));
  }
  if (names_.size() != n) throw std::invalid_argument("name table size differs from state count");

  pred_.assign(n, {});
  env_states_ = state_set(n);
  sys_states_ = state_set(n);
  for (std::size_t q = 0; q < n; ++q) {
    auto& s = succ_[q];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    edges_ += s.size();
    for (state_id t : s)
      if (t < n) pred_[t].push_back(static_cast<state_id>(q));
    (owner_[q] == player::env ? env_states_ : sys_states_).insert(static_cast<state_id>(q));
    by_name_.emplace(names_[q], static_cast<state_id>(q));
  }
}

std::optional<state_id> game_graph::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string describe_state(const game_graph& g, state_id q) {
  if (q < g.size()) return g.name(q);
  return std::to_string(q);
}

namespace {

void check_sets(const game_graph& g, const std::vector<state_set>& sets, const char* kind,
                std::vector<std::string>& out) {
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& s = sets[k];
    bool foreign = false;
    s.for_each([&](state_id q) {
      if (q >= g.size()) {
        out.push_back(std::string(kind) + " set " + std::to_string(k + 1) + " references unknown state " +
                      std::to_string(q));
        foreign = true;
      }
    });
    if (!foreign && s.width() != g.size())
      out.push_back(std::string(kind) + " set " + std::to_string(k + 1) + " has width " +
                    std::to_string(s.width()) + ", expected " + std::to_string(g.size()));
  }
}

}  // namespace

std::vector<std::string> validate(const game_graph& g, const gr1_spec& s) {
  std::vector<std::string> out;
  if (g.size() == 0) {
    out.push_back("game has no states");
    return out;
  }
  if (g.init() >= g.size()) {
    out.push_back("initial state " + std::to_string(g.init()) + " is unknown");
  } else if (g.owner(g.init()) != player::env) {
    out.push_back("initial state " + g.name(g.init()) + " is not environment-owned");
  }
  for (state_id q = 0; q < g.size(); ++q) {
    auto succ = g.successors(q);
    if (succ.empty()) out.push_back("state " + g.name(q) + " has no successor");
    for (state_id t : succ) {
      if (t >= g.size()) {
        out.push_back("state " + g.name(q) + " has successor " + std::to_string(t) + " outside the graph");
      } else if (g.owner(t) == g.owner(q)) {
        out.push_back("alternation violated: edge " + g.name(q) + " -> " + g.name(t) + " stays with " +
                      (g.owner(q) == player::env ? "environment" : "system"));
      }
    }
  }
  check_sets(g, s.assumptions, "assumption", out);
  check_sets(g, s.guarantees, "guarantee", out);
  return out;
}

void require_valid(const game_graph& g, const gr1_spec& s) {
  auto v = validate(g, s);
  if (v.empty()) return;
  std::string msg = "invalid game:";
  for (const auto& line : v) msg += "\n  " + line;
  throw invalid_game(msg);
}

std::vector<state_set> effective_sets(const std::vector<state_set>& sets, std::size_t width) {
  if (sets.empty()) return {state_set::full(width)};
  return sets;
}

}  // namespace ncgr1
