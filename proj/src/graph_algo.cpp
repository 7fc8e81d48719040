#include "ncgr1/graph_algo.hpp"

#include <algorithm>
#include <deque>

namespace ncgr1 {

namespace {
bool kept(const std::vector<bool>& keep, std::uint32_t v) { return keep.empty() || keep[v]; }
}  // namespace

scc_decomposition tarjan_scc(const adjacency& adj, const std::vector<bool>& keep) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  constexpr std::uint32_t unvisited = UINT32_MAX;
  scc_decomposition out;
  out.component.assign(n, scc_decomposition::npos);
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // node, next edge position
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (!kept(keep, root) || index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < adj[v].size()) {
        const std::uint32_t w = adj[v][pos++];
        if (!kept(keep, w)) continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != index[done]) continue;
      const auto id = static_cast<std::uint32_t>(out.members.size());
      out.members.emplace_back();
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        out.component[w] = id;
        out.members.back().push_back(w);
      } while (w != done);
      std::sort(out.members.back().begin(), out.members.back().end());
    }
  }

  out.nontrivial.assign(out.members.size(), false);
  for (std::uint32_t c = 0; c < out.members.size(); ++c) {
    for (std::uint32_t v : out.members[c]) {
      for (std::uint32_t w : adj[v]) {
        if (out.component[w] == c) {
          out.nontrivial[c] = true;
          break;
        }
      }
      if (out.nontrivial[c]) break;
    }
  }
  return out;
}

std::vector<bool> reachable_from(const adjacency& adj, std::uint32_t from, const std::vector<bool>& keep) {
  std::vector<bool> seen(adj.size(), false);
  if (from >= adj.size() || !kept(keep, from)) return seen;
  std::vector<std::uint32_t> work{from};
  seen[from] = true;
  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t w : adj[v]) {
      if (seen[w] || !kept(keep, w)) continue;
      seen[w] = true;
      work.push_back(w);
    }
  }
  return seen;
}

std::vector<bool> can_reach(const adjacency& adj, const std::vector<bool>& targets) {
  adjacency rev(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    for (std::uint32_t w : adj[v]) rev[w].push_back(v);
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::uint32_t> work;
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    if (targets[v]) {
      seen[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t w : rev[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      work.push_back(w);
    }
  }
  return seen;
}

std::vector<std::uint32_t> bfs_path(const adjacency& adj, std::uint32_t from, const std::vector<bool>& goal,
                                    const std::vector<bool>& keep) {
  constexpr std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> parent(adj.size(), none);
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::uint32_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    if (goal[v]) {
      std::vector<std::uint32_t> path;
      for (std::uint32_t x = v; x != none; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::uint32_t w : adj[v]) {
      if (seen[w] || !kept(keep, w)) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace ncgr1
