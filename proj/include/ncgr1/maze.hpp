#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgr1/game_io.hpp"

namespace ncgr1 {

enum class maze_variant { falsifiable, nonfalsifiable };

std::string to_string(maze_variant v);
maze_variant parse_maze_variant(const std::string& text);

class maze_param_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct maze_params {
  int cols = 3;
  int lines = 2;
  int goals = 2;  // per player
  maze_variant variant = maze_variant::falsifiable;
};

struct cell {
  int col = 0;
  int row = 0;  // row 0 is the bottom line
  auto operator<=>(const cell&) const = default;
};

/// Robot (system) versus obstacle (environment) on a cols x lines grid. Rows
/// are separated by walls except in one passage column. Goal k of both
/// players sits in row k, at opposite ends. The obstacle moves first and
/// either player may stay put; the obstacle of the non-falsifiable variant
/// moves up to two cells and may pass the robot.
struct maze_instance {
  maze_params params;
  game_file game;
  int passage_col = 0;
  std::vector<cell> robot_goals;
  std::vector<cell> obstacle_goals;
  std::vector<cell> robot;     // per state
  std::vector<cell> obstacle;  // per state
};

maze_instance maze_generate(const maze_params& p);

/// Wall between vertically adjacent cells (c, r) and (c, r + 1).
bool maze_wall_above(const maze_instance& m, cell c);

std::string describe(const maze_params& p);

}  // namespace ncgr1
