#pragma once

#include "ncgr1/game.hpp"

namespace ncgr1 {

/// States with some successor in p.
state_set pre_exists(const game_graph& g, const state_set& p);
/// States with all successors in p.
state_set pre_forall(const game_graph& g, const state_set& p);
/// States from which player `who` forces the next state into p.
state_set pre_ctrl(const game_graph& g, player who, const state_set& p);
/// pre_exists(p) & pre_ctrl(sys, p | p2)
state_set apre(const game_graph& g, const state_set& p, const state_set& p2);
/// pre_forall(p) | pre_ctrl(env, p & p2)
state_set apre_dual(const game_graph& g, const state_set& p, const state_set& p2);

}  // namespace ncgr1
