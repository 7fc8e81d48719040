#pragma once

#include <vector>

#include "ncgr1/game.hpp"
#include "ncgr1/solver_common.hpp"
#include "ncgr1/strategy.hpp"

namespace ncgr1 {

/// Y^i and W^i_j snapshots of the last outer iteration. y[0] and w[i][0] are
/// empty; w[i] is the W chain evaluated with X = Y^i.
struct fixpoint_trace {
  std::vector<state_set> y;
  std::vector<std::vector<state_set>> w;
};

struct rank_table {
  state_set fa;
  state_set fg;
  state_set winning;
  std::vector<rank> ranks;  // undefined outside winning
  fixpoint_trace trace;
  fixpoint_stats stats;

  rank at(state_id q) const { return ranks.at(q); }
};

enum class rank_kind { goal, assumption, progress, unranked };

struct rank_class {
  rank_kind kind = rank_kind::unranked;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
};

/// nu Z. mu Y. nu X. mu W. (F_G & Pre1(Z)) | Pre1(Y) | (!F_A & Apre(W, X - F_A)).
rank_table solve_4fp_singleton(const game_graph& g, const state_set& fa, const state_set& fg,
                               const solve_options& opt = {});

/// goal: rank (1,1); assumption: (i,1) with i > 1; progress: j > 1.
rank_class classify_rank(const rank_table& t, state_id q);

/// Minimal-rank successor inside the winning region, ties to the smaller id.
memoryless_strategy extract_strategy_singleton(const game_graph& g, const rank_table& t);

/// Environment region of the dual fixed point
/// mu Z. nu Y. mu X. nu W. Pre0(Z) | (!F_G & F_A & Pre0(Y)) | (!F_G & Apre_dual(W, X | F_A)).
state_set solve_4fp_negated(const game_graph& g, const state_set& fa, const state_set& fg,
                            const solve_options& opt = {});

}  // namespace ncgr1
