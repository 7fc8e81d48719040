#pragma once

// Shared helpers for unit and acceptance tests: random arenas and independent
// oracles that do not reuse the solvers under test.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncgr1/game_io.hpp"
#include "ncgr1/singleton.hpp"
#include "ncgr1/strategy.hpp"
#include "ncgr1/vector.hpp"

namespace ncgr1::testing {

struct random_game_params {
  std::size_t min_states = 4;
  std::size_t max_states = 24;
  std::size_t max_out = 3;
  std::size_t assumptions = 1;  // exact count
  std::size_t guarantees = 1;
  double density = 0.25;  // membership probability for condition sets
};

/// Valid bipartite arena with at least one state per player and env-owned init.
game_file random_game(std::mt19937_64& rng, const random_game_params& p);

state_set random_set(std::mt19937_64& rng, std::size_t width, double density);

/// Vector negated fixed point with per-line Pre0(Z) over-approximation.
std::vector<state_set> negated_vector_oracle(const game_graph& g, const gr1_spec& s);

/// Line-wise negation of the vector fixed point without the over-approximation.
std::vector<state_set> negated_vector_exact(const game_graph& g, const gr1_spec& s);

/// Generalized Buchi non-emptiness by subset enumeration (at most 16 states):
/// true iff some strongly connected set with an internal edge, reachable from
/// init in the whole graph, avoids `removed` and meets every guarantee set.
bool buchi_nonempty_bruteforce(const game_graph& g, const state_set& removed, const std::vector<state_set>& goals);

/// Searches all Mealy strategies with `memory` states; memory is carried in the
/// goal mode of the strategy. Returns the first one whose closed loop the cycle
/// oracle accepts (GR(1) satisfied and non-conflicting).
std::optional<mealy_strategy> find_finite_memory_strategy(const game_graph& g, const gr1_spec& s,
                                                          std::uint32_t memory);

/// Human-readable violations of the singleton rank invariants and case analysis.
std::vector<std::string> singleton_rank_violations(const game_graph& g, const rank_table& t);

/// Violations of the moded implications and per-level rank definition.
std::vector<std::string> vector_rank_violations(const game_graph& g, const moded_rank_table& t);

}  // namespace ncgr1::testing
