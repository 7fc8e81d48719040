#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncgr1/state_set.hpp"

namespace ncgr1 {

enum class player : std::uint8_t { env = 0, sys = 1 };

constexpr player opponent(player p) { return p == player::env ? player::sys : player::env; }

/// Thrown by solvers handed a graph or winning condition that fails validation.
class invalid_game : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bipartite two-player game graph. Successor lists are kept sorted and
/// duplicate free; predecessor lists are derived on construction.
class game_graph {
public:
  game_graph() = default;
  game_graph(std::vector<player> owner, std::vector<std::vector<state_id>> succ, state_id init,
             std::vector<std::string> names = {});

  std::size_t size() const noexcept { return owner_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  player owner(state_id q) const { return owner_.at(q); }
  std::span<const state_id> successors(state_id q) const { return succ_.at(q); }
  std::span<const state_id> predecessors(state_id q) const { return pred_.at(q); }
  state_id init() const noexcept { return init_; }

  const std::string& name(state_id q) const { return names_.at(q); }
  std::optional<state_id> find(const std::string& name) const;

  state_set all() const { return state_set::full(size()); }
  state_set none() const { return state_set(size()); }
  const state_set& owned_by(player p) const { return p == player::env ? env_states_ : sys_states_; }

private:
  std::vector<player> owner_;
  std::vector<std::vector<state_id>> succ_;
  std::vector<std::vector<state_id>> pred_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, state_id> by_name_;
  state_set env_states_;
  state_set sys_states_;
  std::size_t edges_ = 0;
  state_id init_ = 0;
};

/// Generalized Buchi assumptions and guarantees. An empty list stands for the
/// trivially true condition.
struct gr1_spec {
  std::vector<state_set> assumptions;
  std::vector<state_set> guarantees;

  bool operator==(const gr1_spec&) const = default;
};

/// Lists every structural problem; empty means the pair is valid.
std::vector<std::string> validate(const game_graph& g, const gr1_spec& s);

/// Throws invalid_game carrying all violations.
void require_valid(const game_graph& g, const gr1_spec& s);

/// Replaces an empty condition list by the single set Q.
std::vector<state_set> effective_sets(const std::vector<state_set>& sets, std::size_t width);

std::string describe_state(const game_graph& g, state_id q);

}  // namespace ncgr1
