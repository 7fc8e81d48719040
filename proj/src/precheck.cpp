#include "ncgr1/precheck.hpp"

#include <algorithm>

#include "ncgr1/graph_algo.hpp"

namespace ncgr1 {

std::vector<std::size_t> check_inclusion(const game_graph& g, const gr1_spec& s) {
  require_valid(g, s);
  const std::size_t N = g.size();
  adjacency adj(N);
  for (state_id q = 0; q < N; ++q) adj[q].assign(g.successors(q).begin(), g.successors(q).end());

  std::vector<std::size_t> failed;
  for (std::size_t b = 0; b < s.assumptions.size(); ++b) {
    std::vector<bool> keep(N);
    std::vector<std::size_t> live(N, 0);
    for (state_id q = 0; q < N; ++q) keep[q] = !s.assumptions[b].contains(q);
    // Backward pruning of states left without successors.
    std::vector<state_id> dead;
    for (state_id q = 0; q < N; ++q) {
      if (!keep[q]) continue;
      for (state_id t : g.successors(q)) live[q] += keep[t];
      if (live[q] == 0) dead.push_back(q);
    }
    while (!dead.empty()) {
      const state_id q = dead.back();
      dead.pop_back();
      if (!keep[q]) continue;
      keep[q] = false;
      for (state_id p : g.predecessors(q))
        if (keep[p] && --live[p] == 0) dead.push_back(p);
    }
    // Plays may visit F_A^b finitely often before settling inside H_b.
    const auto reach = reachable_from(adj, g.init());
    const auto scc = tarjan_scc(adj, keep);
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
      const auto& mem = scc.members[c];
      if (!scc.nontrivial[c] || !reach[mem.front()]) continue;
      const bool all_goals = std::all_of(s.guarantees.begin(), s.guarantees.end(), [&](const state_set& fg) {
        return std::any_of(mem.begin(), mem.end(), [&](std::uint32_t v) { return fg.contains(v); });
      });
      if (all_goals) {
        failed.push_back(b);
        break;
      }
    }
  }
  return failed;
}

gr1_spec augment_guarantees(const gr1_spec& s, const std::vector<std::size_t>& failed) {
  gr1_spec out = s;
  for (std::size_t b : failed) {
    const state_set& fa = s.assumptions.at(b);
    if (std::find(out.guarantees.begin(), out.guarantees.end(), fa) == out.guarantees.end())
      out.guarantees.push_back(fa);
  }
  return out;
}

}  // namespace ncgr1
