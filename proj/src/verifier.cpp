#include "ncgr1/verifier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ncgr1 {

std::size_t closed_loop_graph::env_node_count(const game_graph& g) const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [&](const moded_state& v) { return g.owner(v.state) == player::env; }));
}

closed_loop_graph build_closed_loop(const game_graph& g, const mealy_strategy& s) {
  closed_loop_graph cl;
  std::deque<std::uint32_t> queue;
  auto intern = [&](const moded_state& v) {
    auto [it, fresh] = cl.index.emplace(v, static_cast<std::uint32_t>(cl.nodes.size()));
    if (fresh) {
      cl.nodes.push_back(v);
      cl.succ.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(s.init);
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    const moded_state v = cl.nodes[id];
    std::vector<std::uint32_t> out;
    if (g.owner(v.state) == player::sys) {
      auto it = s.sys_moves.find(v);
      if (it == s.sys_moves.end())
        throw strategy_error("strategy has no move for reachable system state " + g.name(v.state) + " in mode (" +
                             std::to_string(v.m.a + 1) + "," + std::to_string(v.m.b + 1) + ")");
      out.push_back(intern(it->second));
    } else {
      for (state_id t : g.successors(v.state)) {
        auto it = s.env_updates.find({v, t});
        if (it == s.env_updates.end())
          throw strategy_error("strategy has no mode update for " + g.name(v.state) + " -> " + g.name(t));
        out.push_back(intern({t, it->second}));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    cl.succ[id] = std::move(out);
  }
  return cl;
}

closed_loop_graph build_closed_loop(const game_graph& g, const memoryless_strategy& s) {
  memoryless_controller c(s);
  return build_closed_loop(g, materialize(g, c, {g.init(), {}}));
}

namespace {

std::vector<bool> marks(const closed_loop_graph& cl, const state_set& set) {
  std::vector<bool> out(cl.size());
  for (std::uint32_t v = 0; v < cl.size(); ++v) out[v] = set.contains(cl.nodes[v].state);
  return out;
}

bool hits(const std::vector<std::uint32_t>& members, const std::vector<bool>& mark) {
  return std::any_of(members.begin(), members.end(), [&](std::uint32_t v) { return mark[v]; });
}

bool hits_all(const std::vector<std::uint32_t>& members, const std::vector<std::vector<bool>>& sets) {
  return std::all_of(sets.begin(), sets.end(), [&](const auto& mark) { return hits(members, mark); });
}

std::vector<std::vector<bool>> all_marks(const closed_loop_graph& cl, const std::vector<state_set>& sets) {
  std::vector<std::vector<bool>> out;
  for (const auto& s : sets) out.push_back(marks(cl, s));
  return out;
}

lasso make_lasso(const closed_loop_graph& cl, const std::vector<std::uint32_t>& members,
                 const std::vector<std::vector<bool>>& visit) {
  std::vector<bool> inside(cl.size(), false), member_goal(cl.size(), false);
  for (std::uint32_t v : members) inside[v] = member_goal[v] = true;
  lasso l;
  auto stem = bfs_path(cl.succ, 0, member_goal);
  const std::uint32_t entry = stem.back();
  stem.pop_back();
  l.stem = std::move(stem);

  std::vector<std::uint32_t> cycle{entry};
  std::uint32_t cur = entry;
  auto walk = [&](std::uint32_t from, const std::vector<bool>& goal) {
    auto seg = bfs_path(cl.succ, from, goal, inside);
    cycle.insert(cycle.end(), seg.begin() + 1, seg.end());
    cur = seg.back();
  };
  for (const auto& mark : visit) {
    std::vector<bool> goal(cl.size(), false);
    for (std::uint32_t v : members) goal[v] = mark[v];
    walk(cur, goal);
  }
  std::uint32_t step = *std::find_if(cl.succ[cur].begin(), cl.succ[cur].end(), [&](std::uint32_t w) { return inside[w]; });
  cycle.push_back(step);
  cur = step;
  std::vector<bool> home(cl.size(), false);
  home[entry] = true;
  walk(cur, home);
  cycle.pop_back();
  l.cycle = std::move(cycle);
  return l;
}

}  // namespace

gr1_verdict check_gr1_holds(const closed_loop_graph& cl, const gr1_spec& s) {
  const auto fa = all_marks(cl, s.assumptions);
  const auto fg = all_marks(cl, s.guarantees);
  for (std::size_t a = 0; a < fg.size(); ++a) {
    std::vector<bool> keep(cl.size());
    for (std::uint32_t v = 0; v < cl.size(); ++v) keep[v] = !fg[a][v];
    const auto scc = tarjan_scc(cl.succ, keep);
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
      if (!scc.nontrivial[c] || !hits_all(scc.members[c], fa)) continue;
      gr1_verdict v;
      v.holds = false;
      v.missed_goal = a;
      v.counterexample = make_lasso(cl, scc.members[c], fa);
      return v;
    }
  }
  return {};
}

nonconflict_verdict check_nonconflicting(const closed_loop_graph& cl, const gr1_spec& s) {
  const auto fa = all_marks(cl, s.assumptions);
  const auto scc = tarjan_scc(cl.succ);
  std::vector<bool> good(cl.size(), false);
  for (std::size_t c = 0; c < scc.members.size(); ++c)
    if (scc.nontrivial[c] && hits_all(scc.members[c], fa))
      for (std::uint32_t v : scc.members[c]) good[v] = true;
  const auto ok = can_reach(cl.succ, good);
  // Nodes are numbered in breadth-first order, so the first miss is closest to the start.
  for (std::uint32_t v = 0; v < cl.size(); ++v)
    if (!ok[v]) return {false, v};
  return {};
}

bool detect_falsifying(const closed_loop_graph& cl, const gr1_spec& s) { return !check_nonconflicting(cl, s).holds; }

bool has_goal_cycle(const closed_loop_graph& cl, const gr1_spec& s) {
  const auto fg = all_marks(cl, s.guarantees);
  const auto scc = tarjan_scc(cl.succ);
  for (std::size_t c = 0; c < scc.members.size(); ++c)
    if (scc.nontrivial[c] && hits_all(scc.members[c], fg)) return true;
  return false;
}

oracle_report oracle_verify(const closed_loop_graph& cl, const gr1_spec& s, std::size_t bound,
                            std::size_t max_cycles) {
  const std::size_t n = cl.size();
  if (n > bound || n > 64)
    throw std::length_error("closed loop has " + std::to_string(n) + " nodes, oracle bound is " + std::to_string(bound));
  using mask = std::uint64_t;
  auto set_mask = [&](const state_set& set) {
    mask m = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (set.contains(cl.nodes[v].state)) m |= mask{1} << v;
    return m;
  };
  std::vector<mask> fa, fg;
  for (const auto& x : s.assumptions) fa.push_back(set_mask(x));
  for (const auto& x : s.guarantees) fg.push_back(set_mask(x));
  auto hits_every = [](mask m, const std::vector<mask>& sets) {
    return std::all_of(sets.begin(), sets.end(), [&](mask x) { return (m & x) != 0; });
  };

  // Simple cycles, each reported once from its smallest node.
  std::vector<mask> cycles;
  std::size_t steps = 0;
  const std::size_t max_steps = 50 * max_cycles;
  for (std::uint32_t start = 0; start < n; ++start) {
    std::vector<std::pair<std::uint32_t, std::size_t>> path{{start, 0}};
    mask on_path = mask{1} << start;
    while (!path.empty()) {
      auto& [v, pos] = path.back();
      if (pos == cl.succ[v].size()) {
        on_path &= ~(mask{1} << v);
        path.pop_back();
        continue;
      }
      const std::uint32_t w = cl.succ[v][pos++];
      if (++steps > max_steps) throw std::length_error("cycle enumeration exceeds oracle budget");
      if (w == start) {
        cycles.push_back(on_path);
        if (cycles.size() > max_cycles) throw std::length_error("simple cycle count exceeds oracle budget");
      } else if (w > start && !(on_path & (mask{1} << w))) {
        on_path |= mask{1} << w;
        path.push_back({w, 0});
      }
    }
  }

  // Strongly connected unions: cycles sharing a node merge.
  auto unions = [&](const std::vector<mask>& pool) {
    std::vector<std::size_t> parent(pool.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::size_t> owner(n, SIZE_MAX);
    for (std::size_t c = 0; c < pool.size(); ++c) {
      for (std::uint32_t v = 0; v < n; ++v) {
        if (!(pool[c] & (mask{1} << v))) continue;
        if (owner[v] == SIZE_MAX) owner[v] = c;
        else parent[find(c)] = find(owner[v]);
      }
    }
    std::vector<mask> merged(pool.size(), 0);
    for (std::size_t c = 0; c < pool.size(); ++c) merged[find(c)] |= pool[c];
    std::vector<mask> out;
    for (std::size_t c = 0; c < pool.size(); ++c)
      if (find(c) == c) out.push_back(merged[c]);
    return out;
  };

  // Plain depth-first reachability from the initial node.
  mask reach = 1;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : cl.succ[v])
      if (!(reach & (mask{1} << w))) {
        reach |= mask{1} << w;
        stack.push_back(w);
      }
  }

  oracle_report rep;
  rep.cycles = cycles.size();
  const auto all = unions(cycles);
  for (std::size_t a = 0; a < fg.size() && rep.gr1_holds; ++a) {
    std::vector<mask> avoiding;
    for (mask c : cycles)
      if (!(c & fg[a])) avoiding.push_back(c);
    for (mask u : unions(avoiding))
      if ((u & reach) && hits_every(u, fa)) rep.gr1_holds = false;
  }
  mask good = 0;
  for (mask u : all) {
    if (!(u & reach)) continue;
    if (hits_every(u, fa)) good |= u;
    if (hits_every(u, fg)) rep.goal_cycle = true;
  }
  for (std::uint32_t v = 0; v < n && rep.nonconflicting; ++v) {
    if (!(reach & (mask{1} << v))) continue;
    mask seen = mask{1} << v;
    std::vector<std::uint32_t> work{v};
    bool found = (good & seen) != 0;
    while (!work.empty() && !found) {
      const std::uint32_t x = work.back();
      work.pop_back();
      for (std::uint32_t w : cl.succ[x]) {
        if (seen & (mask{1} << w)) continue;
        seen |= mask{1} << w;
        if (good & (mask{1} << w)) found = true;
        work.push_back(w);
      }
    }
    rep.nonconflicting = found;
  }
  return rep;
}

nlohmann::json node_json(const game_graph& g, const closed_loop_graph& cl, std::uint32_t v) {
  const auto& x = cl.nodes[v];
  return {{"state", g.name(x.state)}, {"a", x.m.a + 1}, {"b", x.m.b + 1}};
}

nlohmann::json lasso_json(const game_graph& g, const closed_loop_graph& cl, const lasso& l) {
  nlohmann::json doc;
  doc["stem"] = nlohmann::json::array();
  doc["cycle"] = nlohmann::json::array();
  for (auto v : l.stem) doc["stem"].push_back(node_json(g, cl, v));
  for (auto v : l.cycle) doc["cycle"].push_back(node_json(g, cl, v));
  return doc;
}

std::string describe_node(const game_graph& g, const closed_loop_graph& cl, std::uint32_t v) {
  const auto& x = cl.nodes[v];
  return g.name(x.state) + " (a=" + std::to_string(x.m.a + 1) + ", b=" + std::to_string(x.m.b + 1) + ")";
}

}  // namespace ncgr1
