#include "ncgr1/vector.hpp"

#include <tuple>

#include "ncgr1/transformers.hpp"

namespace ncgr1 {

moded_rank_table solve_4fp_vector(const game_graph& g, const gr1_spec& s, bool heuristic,
                                  const solve_options& opt) {
  require_valid(g, s);
  const std::size_t N = g.size();
  moded_rank_table t;
  t.heuristic = heuristic;
  t.assumptions = effective_sets(s.assumptions, N);
  t.guarantees = effective_sets(s.guarantees, N);
  t.n = t.guarantees.size();
  t.m = t.assumptions.size();
  if (heuristic && t.n != t.m)
    throw std::invalid_argument("heuristic needs as many assumptions as guarantees (n = " + std::to_string(t.n) +
                                ", m = " + std::to_string(t.m) + ")");
  t.stats.line_pre_calls.assign(t.n * t.m, 0);
  std::vector<state_set> outside_fa;
  for (const auto& fa : t.assumptions) outside_fa.push_back(fa.complement());

  auto count = [&](std::size_t line) {
    ++t.stats.pre_calls;
    ++t.stats.line_pre_calls[line];
  };

  std::vector<state_set> z(t.n, g.all());
  for (;;) {
    ++t.stats.z_iterations;
    std::vector<state_set> next(t.n);
    std::vector<std::vector<state_set>> chains(t.n);
    std::vector<std::vector<rank>> ranks(t.n * t.m, std::vector<rank>(N));
    for (std::size_t a = 0; a < t.n; ++a) {
      count(a * t.m);
      const state_set goal = t.guarantees[a] & pre_ctrl(g, player::sys, z[(a + 1) % t.n]);
      state_set y = g.none();
      chains[a] = {y};
      for (std::uint32_t i = 1;; ++i) {
        opt.poll();
        ++t.stats.y_iterations;
        count(a * t.m);
        const state_set base = goal | pre_ctrl(g, player::sys, y);
        state_set grown = g.none();
        for (std::size_t b = 0; b < t.m; ++b) {
          if (!t.evaluates(a, b)) continue;
          const std::size_t line = a * t.m + b;
          state_set x = g.all();
          std::vector<state_set> chain;
          for (;;) {
            ++t.stats.x_iterations;
            const state_set stay = x - t.assumptions[b];
            state_set w = g.none();
            chain = {w};
            for (;;) {
              ++t.stats.w_iterations;
              count(line);
              state_set nw = base | (outside_fa[b] & apre(g, w, stay));
              if (nw == w) break;
              w = std::move(nw);
              chain.push_back(w);
            }
            if (w == x) break;
            x = std::move(w);
          }
          for (std::uint32_t j = 1; j < chain.size(); ++j)
            (chain[j] - chain[j - 1] - y).for_each([&](state_id q) { ranks[line][q] = {i, j}; });
          grown |= x;
        }
        if (grown == y) break;
        y = std::move(grown);
        chains[a].push_back(y);
      }
      next[a] = std::move(y);
    }
    t.ranks = std::move(ranks);
    t.y = std::move(chains);
    if (next == z) break;
    z = std::move(next);
  }
  t.z = std::move(z);
  t.winning = t.z[0];
  return t;
}

namespace {

std::optional<std::uint32_t> best_b(const moded_rank_table& t, std::size_t a, state_id q) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t b = 0; b < t.m; ++b) {
    if (!t.evaluates(a, b) || !t.at(a, b, q).defined()) continue;
    if (!best || t.at(a, b, q) < t.at(a, *best, q)) best = b;
  }
  return best;
}

rank current_rank(const moded_rank_table& t, const moded_state& at) {
  if (at.m.a >= t.n || at.m.b >= t.m) throw strategy_error("mode out of range");
  const rank r = t.at(at.m.a, at.m.b, at.state);
  if (!r.defined())
    throw strategy_error("no rank for state " + std::to_string(at.state) + " in mode (" + std::to_string(at.m.a + 1) +
                         "," + std::to_string(at.m.b + 1) + ")");
  return r;
}

}  // namespace

mode initial_mode(const moded_rank_table& t, state_id q0) {
  auto b = best_b(t, 0, q0);
  if (!b) throw strategy_error("initial state is not winning");
  return {0, *b};
}

mode comply_mode(const moded_rank_table& t, const moded_state& at, state_id to) {
  const rank r = current_rank(t, at);
  std::uint32_t a = at.m.a;
  if (r == rank{1, 1}) {
    a = static_cast<std::uint32_t>((a + 1) % t.n);
  } else if (r.j > 1 && t.at(a, at.m.b, to).defined()) {
    return at.m;
  }
  auto b = best_b(t, a, to);
  if (!b) throw strategy_error("environment move to state " + std::to_string(to) + " leaves the ranked region");
  return {a, *b};
}

moded_state moded_controller::sys_move(const moded_state& at) const {
  const rank r = current_rank(t_, at);
  const std::uint32_t a = r == rank{1, 1} ? static_cast<std::uint32_t>((at.m.a + 1) % t_.n) : at.m.a;
  std::optional<std::tuple<rank, std::uint32_t, state_id>> best;
  for (state_id q : g_.successors(at.state)) {
    for (std::uint32_t b = 0; b < t_.m; ++b) {
      if (!t_.evaluates(a, b)) continue;
      if (r.j > 1 && b != at.m.b) continue;
      const rank rq = t_.at(a, b, q);
      if (!rq.defined()) continue;
      if (r.j > 1 && !(rq < r)) continue;
      if (r.j == 1 && r.i > 1 && rq.i >= r.i) continue;
      std::tuple<rank, std::uint32_t, state_id> key{rq, b, q};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) throw strategy_error("no admissible move at state " + g_.name(at.state));
  return {std::get<2>(*best), {a, std::get<1>(*best)}};
}

mealy_strategy extract_strategy_vector(const game_graph& g, const moded_rank_table& t) {
  moded_controller c(g, t);
  return materialize(g, c, {g.init(), initial_mode(t, g.init())});
}

}  // namespace ncgr1
