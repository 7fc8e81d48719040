#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "ncgr1/transformers.hpp"
#include "ncgr1/verifier.hpp"

namespace ncgr1::testing {

state_set random_set(std::mt19937_64& rng, std::size_t width, double density) {
  std::bernoulli_distribution coin(density);
  state_set s(width);
  for (state_id q = 0; q < width; ++q)
    if (coin(rng)) s.insert(q);
  return s;
}

game_file random_game(std::mt19937_64& rng, const random_game_params& p) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(p.min_states, 2),
                                                                   p.max_states)(rng);
  std::vector<player> owner(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& o : owner) o = coin(rng) ? player::env : player::sys;
  owner[0] = player::env;
  owner[n - 1] = player::sys;

  std::vector<state_id> env, sys;
  for (state_id q = 0; q < n; ++q) (owner[q] == player::env ? env : sys).push_back(q);

  std::vector<std::vector<state_id>> succ(n);
  std::uniform_int_distribution<std::size_t> fan(1, p.max_out);
  for (state_id q = 0; q < n; ++q) {
    const auto& pool = owner[q] == player::env ? sys : env;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t k = fan(rng);
    for (std::size_t e = 0; e < k; ++e) succ[q].push_back(pool[pick(rng)]);
  }
  const state_id init = env[std::uniform_int_distribution<std::size_t>(0, env.size() - 1)(rng)];

  game_file out;
  out.graph = game_graph(std::move(owner), std::move(succ), init);
  for (std::size_t b = 0; b < p.assumptions; ++b) out.spec.assumptions.push_back(random_set(rng, n, p.density));
  for (std::size_t a = 0; a < p.guarantees; ++a) out.spec.guarantees.push_back(random_set(rng, n, p.density));
  return out;
}

std::vector<state_set> negated_vector_oracle(const game_graph& g, const gr1_spec& s) {
  const std::size_t N = g.size();
  const auto fa = effective_sets(s.assumptions, N);
  const auto fg = effective_sets(s.guarantees, N);
  const std::size_t n = fg.size(), m = fa.size();

  std::vector<state_set> z(n, g.none());
  for (;;) {
    std::vector<state_set> next(n);
    for (std::size_t a = 0; a < n; ++a) {
      const state_set escape = pre_ctrl(g, player::env, z[(a + 1) % n]);
      const state_set not_fg = fg[a].complement();
      state_set y = g.all();
      for (;;) {
        state_set meet = g.all();
        for (std::size_t b = 0; b < m; ++b) {
          const state_set base = escape | (not_fg & fa[b] & pre_ctrl(g, player::env, y));
          state_set x = g.none();
          for (;;) {
            state_set w = g.all();
            for (;;) {
              state_set nw = base | (not_fg & apre_dual(g, w, x | fa[b]));
              if (nw == w) break;
              w = std::move(nw);
            }
            if (w == x) break;
            x = std::move(w);
          }
          meet &= x;
        }
        if (meet == y) break;
        y = std::move(meet);
      }
      next[a] = std::move(y);
    }
    if (next == z) break;
    z = std::move(next);
  }
  return z;
}

std::vector<state_set> negated_vector_exact(const game_graph& g, const gr1_spec& s) {
  const std::size_t N = g.size();
  const auto fa = effective_sets(s.assumptions, N);
  const auto fg = effective_sets(s.guarantees, N);
  const std::size_t n = fg.size(), m = fa.size();

  std::vector<state_set> z(n, g.none());
  for (;;) {
    std::vector<state_set> next(n);
    for (std::size_t a = 0; a < n; ++a) {
      const state_set head = fg[a].complement() | pre_ctrl(g, player::env, z[(a + 1) % n]);
      state_set y = g.all();
      for (;;) {
        state_set meet = g.all();
        const state_set stay = head & pre_ctrl(g, player::env, y);
        for (std::size_t b = 0; b < m; ++b) {
          state_set x = g.none();
          for (;;) {
            state_set w = g.all();
            for (;;) {
              state_set nw = stay & (fa[b] | apre_dual(g, w, x | fa[b]));
              if (nw == w) break;
              w = std::move(nw);
            }
            if (w == x) break;
            x = std::move(w);
          }
          meet &= x;
        }
        if (meet == y) break;
        y = std::move(meet);
      }
      next[a] = std::move(y);
    }
    if (next == z) break;
    z = std::move(next);
  }
  return z;
}

bool buchi_nonempty_bruteforce(const game_graph& g, const state_set& removed, const std::vector<state_set>& goals) {
  const std::size_t N = g.size();
  if (N > 16) throw std::invalid_argument("brute force limited to 16 states");

  // A play may pass through removed states before it settles.
  std::vector<bool> reach(N, false);
  std::vector<state_id> stack{g.init()};
  reach[g.init()] = true;
  while (!stack.empty()) {
    const state_id q = stack.back();
    stack.pop_back();
    for (state_id r : g.successors(q))
      if (!reach[r]) {
        reach[r] = true;
        stack.push_back(r);
      }
  }

  for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
    bool ok = true;
    for (state_id q = 0; q < N && ok; ++q)
      if ((mask >> q & 1u) && (!reach[q] || removed.contains(q))) ok = false;
    if (!ok) continue;
    for (const auto& goal : goals) {
      bool hit = false;
      for (state_id q = 0; q < N; ++q)
        if ((mask >> q & 1u) && goal.contains(q)) hit = true;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Strong connectivity of the induced subgraph with an internal edge.
    const state_id root = static_cast<state_id>(__builtin_ctz(mask));
    auto closure = [&](bool forward) {
      std::uint32_t seen = 1u << root;
      std::vector<state_id> st{root};
      while (!st.empty()) {
        const state_id q = st.back();
        st.pop_back();
        for (state_id r : forward ? g.successors(q) : g.predecessors(q))
          if ((mask >> r & 1u) && !(seen >> r & 1u)) {
            seen |= 1u << r;
            st.push_back(r);
          }
      }
      return seen;
    };
    if (closure(true) != mask || closure(false) != mask) continue;
    bool edge = false;
    for (state_id q = 0; q < N && !edge; ++q)
      if (mask >> q & 1u)
        for (state_id r : g.successors(q))
          if (mask >> r & 1u) edge = true;
    if (edge) return true;
  }
  return false;
}

std::optional<mealy_strategy> find_finite_memory_strategy(const game_graph& g, const gr1_spec& s,
                                                          std::uint32_t memory) {
  // One digit per decision: sys choice (successor, next memory) per (state, memory)
  // and memory update per (env edge, memory).
  struct slot {
    state_id q;
    std::uint32_t mem;
    std::optional<state_id> env_to;  // set for env updates
    std::size_t radix;
  };
  std::vector<slot> slots;
  for (state_id q = 0; q < g.size(); ++q)
    for (std::uint32_t k = 0; k < memory; ++k) {
      if (g.owner(q) == player::sys) {
        slots.push_back({q, k, std::nullopt, g.successors(q).size() * memory});
      } else {
        for (state_id r : g.successors(q)) slots.push_back({q, k, r, memory});
      }
    }
  std::vector<std::size_t> digit(slots.size(), 0);
  for (;;) {
    mealy_strategy st;
    st.n = memory;
    st.m = 1;
    st.init = {g.init(), {0, 0}};
    for (std::size_t d = 0; d < slots.size(); ++d) {
      const slot& sl = slots[d];
      const moded_state from{sl.q, {sl.mem, 0}};
      if (sl.env_to) {
        st.env_updates[{from, *sl.env_to}] = {static_cast<std::uint32_t>(digit[d]), 0};
      } else {
        const state_id to = g.successors(sl.q)[digit[d] / memory];
        st.sys_moves[from] = {to, {static_cast<std::uint32_t>(digit[d] % memory), 0}};
      }
    }
    const closed_loop_graph cl = build_closed_loop(g, st);
    const oracle_report rep = oracle_verify(cl, s);
    if (rep.gr1_holds && rep.nonconflicting) return st;

    std::size_t d = 0;
    while (d < slots.size() && ++digit[d] == slots[d].radix) digit[d++] = 0;
    if (d == slots.size()) return std::nullopt;
  }
}

namespace {

std::string where(const game_graph& g, state_id q) { return describe_state(g, q); }

std::string show(rank r) { return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")"; }

}  // namespace

std::vector<std::string> singleton_rank_violations(const game_graph& g, const rank_table& t) {
  std::vector<std::string> out;
  const state_set& z = t.winning;
  for (state_id q = 0; q < g.size(); ++q) {
    const rank r = t.at(q);
    if (r.defined() != z.contains(q)) out.push_back(where(g, q) + ": rank defined outside the winning set or vice versa");
    if (!r.defined()) continue;

    // Per-level definition against the retained iterates.
    const auto& y = t.trace.y;
    if (r.i >= y.size() || !y[r.i].contains(q) || y[r.i - 1].contains(q))
      out.push_back(where(g, q) + ": not fresh in Y at level " + std::to_string(r.i));
    else {
      const auto& w = t.trace.w[r.i];
      if (r.j >= w.size() || !w[r.j].contains(q) || w[r.j - 1].contains(q))
        out.push_back(where(g, q) + ": not fresh in W at " + show(r));
    }

    // Membership biconditionals.
    const bool goal = t.fg.contains(q), assume = t.fa.contains(q);
    if ((r == rank{1, 1}) != goal) out.push_back(where(g, q) + ": rank (1,1) iff goal state fails");
    if ((r.i > 1 && r.j == 1) != (assume && !goal)) out.push_back(where(g, q) + ": rank (i,1) iff assumption state fails");
    if ((r.j > 1) != (!assume && !goal)) out.push_back(where(g, q) + ": rank (i,j>1) iff plain state fails");

    // Case analysis on the edges.
    const auto succ = g.successors(q);
    if (g.owner(q) == player::sys) {
      bool ok = false;
      for (state_id s : succ) {
        if (!z.contains(s)) continue;
        const rank rs = t.at(s);
        if (r == rank{1, 1}) ok = true;
        else if (r.j == 1 && rs.i < r.i) ok = true;
        else if (r.j > 1 && rs.i == r.i && rs.j < r.j) ok = true;
      }
      if (!ok) out.push_back(where(g, q) + ": no successor witnessing the system case for " + show(r));
    } else {
      bool all_in = true, exists_lower = false, all_ok = true;
      for (state_id s : succ) {
        if (!z.contains(s)) {
          all_in = false;
          continue;
        }
        const rank rs = t.at(s);
        if (rs < r) exists_lower = true;
        if (r.j == 1 && r.i > 1 && !(rs.i < r.i)) all_ok = false;
        if (r.j > 1 && !(rs < r) && !(rs.i <= r.i && !t.fa.contains(s))) all_ok = false;
      }
      if (!all_in) out.push_back(where(g, q) + ": environment successor leaves the winning set");
      if (!all_ok) out.push_back(where(g, q) + ": environment successor breaks the rank discipline at " + show(r));
      if (r.j > 1 && !exists_lower) out.push_back(where(g, q) + ": no environment progress successor at " + show(r));
    }
  }
  return out;
}

std::vector<std::string> vector_rank_violations(const game_graph& g, const moded_rank_table& t) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < t.n; ++a) {
    // Only the full fixed point forces the lines to coincide.
    if (!t.heuristic && t.z[a] != t.z[0]) out.push_back("line " + std::to_string(a + 1) + " disagrees with line 1");
    const auto& y = t.y[a];
    for (state_id q = 0; q < g.size(); ++q) {
      bool some_rank = false;
      std::uint32_t level = 0;
      for (std::uint32_t i = 1; i < y.size(); ++i)
        if (y[i].contains(q) && !y[i - 1].contains(q)) level = i;
      for (std::size_t b = 0; b < t.m; ++b) {
        const rank r = t.at(a, b, q);
        if (!r.defined()) continue;
        if (!t.evaluates(a, b)) out.push_back(where(g, q) + ": rank stored for a skipped conjunct");
        some_rank = true;
        if (!t.z[a].contains(q)) out.push_back(where(g, q) + ": ranked outside the line fixed point");
        if (r.i != level) out.push_back(where(g, q) + ": rank level differs from its Y level");
        if (r == rank{1, 1} && !t.guarantees[a].contains(q))
          out.push_back(where(g, q) + ": rank (1,1) outside guarantee " + std::to_string(a + 1));
        if (r.j > 1 && t.assumptions[b].contains(q))
          out.push_back(where(g, q) + ": progress rank inside assumption " + std::to_string(b + 1));
      }
      if (t.z[a].contains(q) != some_rank)
        out.push_back(where(g, q) + ": winning in line " + std::to_string(a + 1) + " but unranked, or the reverse");
    }
  }
  return out;
}

}  // namespace ncgr1::testing
