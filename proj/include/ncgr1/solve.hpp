#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgr1/classic.hpp"
#include "ncgr1/vector.hpp"

namespace ncgr1 {

enum class algorithm { classic, fourfold, heuristic };

std::string to_string(algorithm a);
/// Accepts 3fp, 4fp and 4fp-heuristic.
algorithm parse_algorithm(const std::string& text);

struct solve_request {
  algorithm algo = algorithm::fourfold;
  bool precheck = true;  // augment guarantees before the four-nested solvers
  solve_options options;
};

struct solve_outcome {
  gr1_spec spec;                            // after augmentation
  std::vector<std::size_t> failed_assumptions;
  bool realizable = false;
  std::optional<mealy_strategy> strategy;
  std::optional<moded_rank_table> ranks;    // four-nested runs
  std::optional<classic_result> classic;    // classic runs
  fixpoint_stats stats;
  std::string message;
};

solve_outcome solve_game(const game_graph& g, const gr1_spec& s, const solve_request& req);

}  // namespace ncgr1
