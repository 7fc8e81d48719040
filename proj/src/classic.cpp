#include "ncgr1/classic.hpp"

#include "ncgr1/transformers.hpp"

namespace ncgr1 {

classic_result solve_3fp(const game_graph& g, const gr1_spec& s, const solve_options& opt) {
  require_valid(g, s);
  const std::size_t N = g.size();
  classic_result r;
  r.assumptions = effective_sets(s.assumptions, N);
  r.guarantees = effective_sets(s.guarantees, N);
  r.n = r.guarantees.size();
  r.m = r.assumptions.size();
  r.stats.line_pre_calls.assign(r.n * r.m, 0);
  r.lines.resize(r.n);

  auto pre1 = [&](const state_set& p, std::size_t line) {
    ++r.stats.pre_calls;
    ++r.stats.line_pre_calls[line];
    return pre_ctrl(g, player::sys, p);
  };

  std::vector<state_set> z(r.n, g.all());
  for (;;) {
    ++r.stats.z_iterations;
    std::vector<state_set> next(r.n);
    for (std::size_t a = 0; a < r.n; ++a) {
      classic_line line;
      line.goal_hits = r.guarantees[a] & pre1(z[(a + 1) % r.n], a * r.m);
      state_set y = g.none();
      line.y = {y};
      line.x = {{}};
      for (;;) {
        opt.poll();
        ++r.stats.y_iterations;
        const state_set base = line.goal_hits | pre1(y, a * r.m);
        state_set grown = g.none();
        std::vector<state_set> xs(r.m);
        for (std::size_t b = 0; b < r.m; ++b) {
          const state_set avoid = r.assumptions[b].complement();
          state_set x = g.all();
          for (;;) {
            ++r.stats.x_iterations;
            state_set nx = base | (avoid & pre1(x, a * r.m + b));
            if (nx == x) break;
            x = std::move(nx);
          }
          grown |= x;
          xs[b] = std::move(x);
        }
        if (grown == y) break;
        y = grown;
        line.y.push_back(y);
        line.x.push_back(std::move(xs));
      }
      line.z = y;
      line.y_rank.assign(N, 0);
      for (std::size_t k = 1; k < line.y.size(); ++k)
        (line.y[k] - line.y[k - 1]).for_each([&](state_id q) { line.y_rank[q] = static_cast<std::uint32_t>(k); });
      next[a] = y;
      r.lines[a] = std::move(line);
    }
    if (next == z) break;
    z = std::move(next);
  }
  r.winning = r.lines[0].z;
  return r;
}

moded_state classic_controller::sys_move(const moded_state& at) const {
  const std::uint32_t a = at.m.a;
  if (a >= r_.n) throw strategy_error("goal mode out of range");
  const classic_line& line = r_.lines[a];
  const std::uint32_t here = line.y_rank[at.state];
  if (here == 0) throw strategy_error("state " + g_.name(at.state) + " is outside the winning region");

  auto pick = [&](const classic_line& l, auto&& allowed) -> std::optional<state_id> {
    std::optional<state_id> best;
    for (state_id t : g_.successors(at.state)) {
      if (l.y_rank[t] == 0 || !allowed(t)) continue;
      if (!best || l.y_rank[t] < l.y_rank[*best]) best = t;
    }
    return best;
  };

  if (line.goal_hits.contains(at.state)) {
    const auto a2 = static_cast<std::uint32_t>((a + 1) % r_.n);
    if (auto t = pick(r_.lines[a2], [](state_id) { return true; })) return {*t, {a2, 0}};
  }
  if (auto t = pick(line, [](state_id) { return true; }); t && line.y_rank[*t] < here) return {*t, {a, 0}};
  for (std::size_t b = 0; b < r_.m; ++b) {
    const state_set& x = line.x[here][b];
    if (!x.contains(at.state)) continue;
    if (auto t = pick(line, [&](state_id q) { return x.contains(q); })) return {*t, {a, 0}};
  }
  throw strategy_error("no classic move at state " + g_.name(at.state));
}

mode classic_controller::env_update(const moded_state& at, state_id) const {
  const std::uint32_t a = at.m.a;
  if (r_.lines[a].goal_hits.contains(at.state)) return {static_cast<std::uint32_t>((a + 1) % r_.n), 0};
  return {a, 0};
}

mealy_strategy extract_strategy_classic(const game_graph& g, const classic_result& r) {
  if (!r.winning.contains(g.init())) throw strategy_error("initial state is not winning");
  classic_controller c(g, r);
  return materialize(g, c, {g.init(), {0, 0}});
}

}  // namespace ncgr1
