#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ncgr1/game.hpp"
#include "ncgr1/graph_algo.hpp"
#include "ncgr1/strategy.hpp"

namespace ncgr1 {

/// Product of the game with a strategy; node 0 is the initial node.
struct closed_loop_graph {
  std::vector<moded_state> nodes;
  adjacency succ;
  std::map<moded_state, std::uint32_t> index;

  std::size_t size() const { return nodes.size(); }
  /// Nodes whose game state is owned by the environment.
  std::size_t env_node_count(const game_graph& g) const;
};

closed_loop_graph build_closed_loop(const game_graph& g, const mealy_strategy& s);
closed_loop_graph build_closed_loop(const game_graph& g, const memoryless_strategy& s);

/// Finite stem from the initial node followed by a cycle repeated forever.
struct lasso {
  std::vector<std::uint32_t> stem;
  std::vector<std::uint32_t> cycle;
};

struct gr1_verdict {
  bool holds = true;
  std::optional<lasso> counterexample;
  std::size_t missed_goal = 0;  // zero based, meaningful when !holds
};

struct nonconflict_verdict {
  bool holds = true;
  std::optional<std::uint32_t> stuck;
};

/// Every infinite play satisfying all assumptions satisfies all guarantees.
gr1_verdict check_gr1_holds(const closed_loop_graph& cl, const gr1_spec& s);

/// From every reachable node some continuation visits all assumptions
/// infinitely often.
nonconflict_verdict check_nonconflicting(const closed_loop_graph& cl, const gr1_spec& s);

/// True when some finite play cannot be extended to satisfy the assumptions.
bool detect_falsifying(const closed_loop_graph& cl, const gr1_spec& s);

/// Some play visits every guarantee infinitely often.
bool has_goal_cycle(const closed_loop_graph& cl, const gr1_spec& s);

struct oracle_report {
  bool gr1_holds = true;
  bool nonconflicting = true;
  bool goal_cycle = false;
  std::size_t cycles = 0;
};

/// Decides the same three properties by enumerating simple cycles and
/// merging the overlapping ones. Throws std::length_error above `bound`
/// nodes or when the cycle count explodes.
oracle_report oracle_verify(const closed_loop_graph& cl, const gr1_spec& s, std::size_t bound = 64,
                            std::size_t max_cycles = 2'000'000);

nlohmann::json node_json(const game_graph& g, const closed_loop_graph& cl, std::uint32_t v);
nlohmann::json lasso_json(const game_graph& g, const closed_loop_graph& cl, const lasso& l);
std::string describe_node(const game_graph& g, const closed_loop_graph& cl, std::uint32_t v);

}  // namespace ncgr1
