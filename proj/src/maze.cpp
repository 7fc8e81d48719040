#include "ncgr1/maze.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace ncgr1 {

std::string to_string(maze_variant v) { return v == maze_variant::falsifiable ? "falsifiable" : "nonfalsifiable"; }

maze_variant parse_maze_variant(const std::string& text) {
  if (text == "falsifiable" || text == "f") return maze_variant::falsifiable;
  if (text == "nonfalsifiable" || text == "non-falsifiable" || text == "nf") return maze_variant::nonfalsifiable;
  throw maze_param_error("unknown maze variant '" + text + "' (use falsifiable or nonfalsifiable)");
}

std::string describe(const maze_params& p) {
  return std::to_string(p.cols) + "/" + std::to_string(p.lines) + "/" + std::to_string(p.goals) +
         (p.variant == maze_variant::falsifiable ? "/f" : "/nf");
}

namespace {

struct grid {
  int cols, lines, passage;

  bool inside(cell c) const { return c.col >= 0 && c.col < cols && c.row >= 0 && c.row < lines; }
  int index(cell c) const { return c.row * cols + c.col; }
  int size() const { return cols * lines; }
  cell at(int i) const { return {i % cols, i / cols}; }

  bool open(cell from, cell to) const {
    if (!inside(to)) return false;
    if (from.col != to.col) return true;
    return from.col == passage;
  }

  std::vector<cell> steps(cell c) const {
    std::vector<cell> out;
    for (cell d : {cell{c.col - 1, c.row}, cell{c.col + 1, c.row}, cell{c.col, c.row - 1}, cell{c.col, c.row + 1}})
      if (open(c, d)) out.push_back(d);
    return out;
  }
};

std::string state_name(bool env_turn, cell r, cell o) {
  return std::string(env_turn ? "e" : "s") + "/r" + std::to_string(r.col) + "," + std::to_string(r.row) + "/o" +
         std::to_string(o.col) + "," + std::to_string(o.row);
}

}  // namespace

bool maze_wall_above(const maze_instance& m, cell c) {
  return c.row + 1 < m.params.lines && c.col != m.passage_col;
}

maze_instance maze_generate(const maze_params& p) {
  if (p.cols < 2) throw maze_param_error("maze needs at least 2 columns");
  if (p.lines < 1) throw maze_param_error("maze needs at least 1 line");
  if (p.goals < 1) throw maze_param_error("each player needs at least one goal");
  if (p.goals > p.lines)
    throw maze_param_error("goal cells do not fit: " + std::to_string(p.goals) + " goals need " +
                           std::to_string(p.goals) + " lines");

  const grid gr{p.cols, p.lines, p.cols / 2};
  maze_instance m;
  m.params = p;
  m.passage_col = gr.passage;
  for (int k = 0; k < p.goals; ++k) {
    const bool even = k % 2 == 0;
    m.robot_goals.push_back({even ? p.cols - 1 : 0, k});
    m.obstacle_goals.push_back({even ? 0 : p.cols - 1, k});
  }

  // Robot goals must be mutually reachable through the wall graph.
  {
    std::vector<bool> seen(gr.size(), false);
    std::deque<cell> queue{m.robot_goals.front()};
    seen[gr.index(m.robot_goals.front())] = true;
    while (!queue.empty()) {
      const cell c = queue.front();
      queue.pop_front();
      for (cell d : gr.steps(c))
        if (!seen[gr.index(d)]) {
          seen[gr.index(d)] = true;
          queue.push_back(d);
        }
    }
    for (cell g : m.robot_goals)
      if (!seen[gr.index(g)]) throw maze_param_error("robot goal graph is disconnected");
  }

  auto is_goal = [](const std::vector<cell>& goals, cell c) {
    return std::find(goals.begin(), goals.end(), c) != goals.end();
  };
  // A player never steps onto a goal cell of the other player.
  auto obstacle_moves = [&](cell o, cell r) {
    std::vector<cell> out{o};
    auto admit = [&](cell d) {
      if (d != r && !is_goal(m.robot_goals, d)) out.push_back(d);
    };
    for (cell d : gr.steps(o)) {
      admit(d);
      if (p.variant == maze_variant::nonfalsifiable)
        for (cell e : gr.steps(d)) admit(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto robot_moves = [&](cell r, cell o) {
    std::vector<cell> out{r};
    for (cell d : gr.steps(r))
      if (d != o && !is_goal(m.obstacle_goals, d)) out.push_back(d);
    return out;
  };

  std::map<std::tuple<bool, int, int>, state_id> ids;
  std::vector<player> owner;
  std::vector<std::string> names;
  for (bool env_turn : {true, false})
    for (int ri = 0; ri < gr.size(); ++ri)
      for (int oi = 0; oi < gr.size(); ++oi) {
        if (ri == oi) continue;
        ids[{env_turn, ri, oi}] = static_cast<state_id>(owner.size());
        owner.push_back(env_turn ? player::env : player::sys);
        names.push_back(state_name(env_turn, gr.at(ri), gr.at(oi)));
        m.robot.push_back(gr.at(ri));
        m.obstacle.push_back(gr.at(oi));
      }

  std::vector<std::vector<state_id>> succ(owner.size());
  for (const auto& [key, q] : ids) {
    const auto [env_turn, ri, oi] = key;
    const cell r = gr.at(ri), o = gr.at(oi);
    if (env_turn) {
      for (cell d : obstacle_moves(o, r)) succ[q].push_back(ids.at({false, ri, gr.index(d)}));
    } else {
      for (cell d : robot_moves(r, o)) succ[q].push_back(ids.at({true, gr.index(d), oi}));
    }
  }

  const state_id init =
      ids.at({true, gr.index({p.cols - 1, 0}), gr.index({0, 0})});
  m.game.graph = game_graph(std::move(owner), std::move(succ), init, std::move(names));
  const std::size_t N = m.game.graph.size();
  for (cell g : m.obstacle_goals) {
    state_set s(N);
    for (state_id q = 0; q < N; ++q)
      if (m.obstacle[q] == g) s.insert(q);
    m.game.spec.assumptions.push_back(std::move(s));
  }
  for (cell g : m.robot_goals) {
    state_set s(N);
    for (state_id q = 0; q < N; ++q)
      if (m.robot[q] == g) s.insert(q);
    m.game.spec.guarantees.push_back(std::move(s));
  }
  require_valid(m.game.graph, m.game.spec);
  return m;
}

}  // namespace ncgr1
