#pragma once

#include <vector>

#include "ncgr1/game.hpp"
#include "ncgr1/solver_common.hpp"
#include "ncgr1/strategy.hpp"

namespace ncgr1 {

/// Result of the vectorized four-nested fixed point.
struct moded_rank_table {
  std::size_t n = 0;
  std::size_t m = 0;
  bool heuristic = false;
  std::vector<state_set> assumptions;  // effective lists, never empty
  std::vector<state_set> guarantees;
  std::vector<state_set> z;               // per goal line
  std::vector<std::vector<state_set>> y;  // per goal line, y[a][0] empty
  std::vector<std::vector<rank>> ranks;   // [a * m + b][q]
  state_set winning;                      // line 1
  fixpoint_stats stats;

  rank at(std::size_t a, std::size_t b, state_id q) const { return ranks[a * m + b][q]; }
  bool evaluates(std::size_t a, std::size_t b) const { return !heuristic || a == b; }
};

/// Line a: mu Y. OR_b nu X. mu W. (F_G^a & Pre1(Z_{a+1})) | Pre1(Y) | (!F_A^b & Apre(W, X - F_A^b)).
/// The heuristic keeps only b == a and needs as many assumptions as guarantees.
moded_rank_table solve_4fp_vector(const game_graph& g, const gr1_spec& s, bool heuristic = false,
                                  const solve_options& opt = {});

/// a = 1 and the b with the smallest rank at q0.
mode initial_mode(const moded_rank_table& t, state_id q0);

/// Mode the system adopts after the environment moves from `at` to `to`.
mode comply_mode(const moded_rank_table& t, const moded_state& at, state_id to);

class moded_controller : public controller {
public:
  moded_controller(const game_graph& g, const moded_rank_table& t) : g_(g), t_(t) {}
  std::size_t goal_modes() const override { return t_.n; }
  std::size_t assumption_modes() const override { return t_.m; }
  moded_state sys_move(const moded_state& at) const override;
  mode env_update(const moded_state& at, state_id to) const override { return comply_mode(t_, at, to); }

private:
  const game_graph& g_;
  const moded_rank_table& t_;
};

mealy_strategy extract_strategy_vector(const game_graph& g, const moded_rank_table& t);

}  // namespace ncgr1
