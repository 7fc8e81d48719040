#include "ncgr1/singleton.hpp"

#include "ncgr1/transformers.hpp"

namespace ncgr1 {

rank_table solve_4fp_singleton(const game_graph& g, const state_set& fa, const state_set& fg,
                               const solve_options& opt) {
  require_valid(g, gr1_spec{{fa}, {fg}});
  rank_table t;
  t.fa = fa;
  t.fg = fg;
  t.stats.line_pre_calls.assign(1, 0);
  const state_set outside_fa = fa.complement();

  auto count = [&] {
    ++t.stats.pre_calls;
    ++t.stats.line_pre_calls[0];
  };

  state_set z = g.all();
  for (;;) {
    ++t.stats.z_iterations;
    count();
    const state_set goal = fg & pre_ctrl(g, player::sys, z);
    state_set y = g.none();
    fixpoint_trace trace{{y}, {{}}};
    for (;;) {
      opt.poll();
      ++t.stats.y_iterations;
      count();
      const state_set base = goal | pre_ctrl(g, player::sys, y);
      state_set x = g.all();
      std::vector<state_set> chain;
      for (;;) {
        ++t.stats.x_iterations;
        const state_set stay = x - fa;
        state_set w = g.none();
        chain = {w};
        for (;;) {
          ++t.stats.w_iterations;
          count();
          state_set nw = base | (outside_fa & apre(g, w, stay));
          if (nw == w) break;
          w = std::move(nw);
          chain.push_back(w);
        }
        if (w == x) break;
        x = std::move(w);
      }
      if (x == y) break;
      y = std::move(x);
      trace.y.push_back(y);
      trace.w.push_back(std::move(chain));
    }
    if (y == z) {
      t.trace = std::move(trace);
      break;
    }
    z = std::move(y);
  }

  t.winning = z;
  t.ranks.assign(g.size(), rank{});
  for (std::uint32_t i = 1; i < t.trace.y.size(); ++i) {
    const state_set fresh = t.trace.y[i] - t.trace.y[i - 1];
    const auto& chain = t.trace.w[i];
    for (std::uint32_t j = 1; j < chain.size(); ++j)
      ((chain[j] - chain[j - 1]) & fresh).for_each([&](state_id q) { t.ranks[q] = {i, j}; });
  }
  return t;
}

rank_class classify_rank(const rank_table& t, state_id q) {
  const rank r = t.at(q);
  if (!r.defined()) return {};
  if (r.j > 1) return {rank_kind::progress, r.i, r.j};
  if (r.i == 1) return {rank_kind::goal, 1, 1};
  return {rank_kind::assumption, r.i, 1};
}

memoryless_strategy extract_strategy_singleton(const game_graph& g, const rank_table& t) {
  memoryless_strategy s;
  s.choice.assign(g.size(), std::nullopt);
  t.winning.for_each([&](state_id q) {
    if (g.owner(q) != player::sys) return;
    std::optional<state_id> best;
    for (state_id n : g.successors(q)) {
      if (!t.winning.contains(n)) continue;
      if (!best || t.at(n) < t.at(*best)) best = n;
    }
    if (!best) throw strategy_error("winning system state " + g.name(q) + " has no winning successor");
    const rank here = t.at(q);
    if (here != rank{1, 1} && !(t.at(*best) < here))
      throw strategy_error("no rank-decreasing successor at " + g.name(q));
    s.choice[q] = best;
  });
  return s;
}

state_set solve_4fp_negated(const game_graph& g, const state_set& fa, const state_set& fg,
                            const solve_options& opt) {
  require_valid(g, gr1_spec{{fa}, {fg}});
  const state_set outside_fg = fg.complement();
  const state_set blocked = outside_fg & fa;

  state_set z = g.none();
  for (;;) {
    const state_set escape = pre_ctrl(g, player::env, z);
    state_set y = g.all();
    for (;;) {
      opt.poll();
      const state_set base = escape | (blocked & pre_ctrl(g, player::env, y));
      state_set x = g.none();
      for (;;) {
        const state_set loose = x | fa;
        state_set w = g.all();
        for (;;) {
          state_set nw = base | (outside_fg & apre_dual(g, w, loose));
          if (nw == w) break;
          w = std::move(nw);
        }
        if (w == x) break;
        x = std::move(w);
      }
      if (x == y) break;
      y = std::move(x);
    }
    if (y == z) break;
    z = std::move(y);
  }
  return z;
}

}  // namespace ncgr1
