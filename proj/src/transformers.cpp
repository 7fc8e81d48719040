#include "ncgr1/transformers.hpp"

namespace ncgr1 {

namespace {

void check(const game_graph& g, const state_set& p) {
  if (p.width() != g.size())
    throw width_mismatch("set of width " + std::to_string(p.width()) + " applied to graph with " +
                         std::to_string(g.size()) + " states");
}

bool any_in(const game_graph& g, state_id q, const state_set& p) {
  for (state_id t : g.successors(q))
    if (p.contains(t)) return true;
  return false;
}

bool all_in(const game_graph& g, state_id q, const state_set& p) {
  for (state_id t : g.successors(q))
    if (!p.contains(t)) return false;
  return true;
}

}  // namespace

state_set pre_exists(const game_graph& g, const state_set& p) {
  check(g, p);
  state_set out(g.size());
  p.for_each([&](state_id t) {
    for (state_id q : g.predecessors(t)) out.insert(q);
  });
  return out;
}

state_set pre_forall(const game_graph& g, const state_set& p) {
  check(g, p);
  state_set out(g.size());
  for (state_id q = 0; q < g.size(); ++q)
    if (all_in(g, q, p)) out.insert(q);
  return out;
}

state_set pre_ctrl(const game_graph& g, player who, const state_set& p) {
  check(g, p);
  state_set out(g.size());
  for (state_id q = 0; q < g.size(); ++q) {
    const bool mine = g.owner(q) == who;
    if (mine ? any_in(g, q, p) : all_in(g, q, p)) out.insert(q);
  }
  return out;
}

state_set apre(const game_graph& g, const state_set& p, const state_set& p2) {
  check(g, p);
  check(g, p2);
  const state_set both = p | p2;
  state_set out(g.size());
  for (state_id q = 0; q < g.size(); ++q) {
    if (!any_in(g, q, p)) continue;
    if (g.owner(q) == player::sys || all_in(g, q, both)) out.insert(q);
  }
  return out;
}

state_set apre_dual(const game_graph& g, const state_set& p, const state_set& p2) {
  check(g, p);
  check(g, p2);
  const state_set both = p & p2;
  state_set out(g.size());
  for (state_id q = 0; q < g.size(); ++q) {
    if (all_in(g, q, p)) {
      out.insert(q);
    } else if (g.owner(q) == player::env ? any_in(g, q, both) : all_in(g, q, both)) {
      out.insert(q);
    }
  }
  return out;
}

}  // namespace ncgr1
