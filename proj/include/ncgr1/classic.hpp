#pragma once

#include <vector>

#include "ncgr1/game.hpp"
#include "ncgr1/solver_common.hpp"
#include "ncgr1/strategy.hpp"

namespace ncgr1 {

/// Iterates of one goal line of the classic three-nested fixed point, taken
/// from the last outer iteration.
struct classic_line {
  state_set z;
  std::vector<state_set> y;               // y[0] is empty, y.back() == z
  std::vector<std::vector<state_set>> x;  // x[r][b] for r >= 1
  std::vector<std::uint32_t> y_rank;      // 0 outside z
  state_set goal_hits;                    // F_G^a intersected with Pre1(Z_{a+})
};

struct classic_result {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<state_set> assumptions;  // effective lists, never empty
  std::vector<state_set> guarantees;
  std::vector<classic_line> lines;
  state_set winning;  // line 1 fixed point
  fixpoint_stats stats;
};

/// Vectorized nu Z. mu Y. nu X. (F_G & Pre1(Z)) | Pre1(Y) | (!F_A & Pre1(X)).
classic_result solve_3fp(const game_graph& g, const gr1_spec& s, const solve_options& opt = {});

/// Moves to the lowest y-rank, stays inside the smallest-index X set while
/// the y-rank cannot drop, and advances the goal at F_G^a.
class classic_controller : public controller {
public:
  classic_controller(const game_graph& g, const classic_result& r) : g_(g), r_(r) {}
  std::size_t goal_modes() const override { return r_.n; }
  std::size_t assumption_modes() const override { return 1; }
  moded_state sys_move(const moded_state& at) const override;
  mode env_update(const moded_state& at, state_id to) const override;

private:
  const game_graph& g_;
  const classic_result& r_;
};

/// Table reachable from the initial state in goal mode 1.
mealy_strategy extract_strategy_classic(const game_graph& g, const classic_result& r);

}  // namespace ncgr1
