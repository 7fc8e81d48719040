#pragma once

#include <cstdint>
#include <vector>

namespace ncgr1 {

using adjacency = std::vector<std::vector<std::uint32_t>>;

struct scc_decomposition {
  std::vector<std::uint32_t> component;  // per node, npos when masked out
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<bool> nontrivial;  // has at least one internal edge

  static constexpr std::uint32_t npos = UINT32_MAX;
};

/// Tarjan's algorithm, iterative. Nodes with keep[v] == false are ignored;
/// an empty mask keeps everything.
scc_decomposition tarjan_scc(const adjacency& adj, const std::vector<bool>& keep = {});

/// Nodes reachable from `from` (inclusive) through kept nodes.
std::vector<bool> reachable_from(const adjacency& adj, std::uint32_t from, const std::vector<bool>& keep = {});

/// Nodes that can reach some target (inclusive).
std::vector<bool> can_reach(const adjacency& adj, const std::vector<bool>& targets);

/// Shortest path from `from` to any node with goal[v], staying in kept nodes.
/// Empty when none is reachable.
std::vector<std::uint32_t> bfs_path(const adjacency& adj, std::uint32_t from, const std::vector<bool>& goal,
                                    const std::vector<bool>& keep = {});

}  // namespace ncgr1
