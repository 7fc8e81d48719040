#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncgr1/game.hpp"

namespace ncgr1 {

/// Goal index a and assumption index b, zero based in memory, one based in files.
struct mode {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  auto operator<=>(const mode&) const = default;
};

struct moded_state {
  state_id state = 0;
  mode m;
  auto operator<=>(const moded_state&) const = default;
};

/// Thrown when a strategy is asked for a move outside its domain.
class strategy_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class strategy_format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A moded strategy in functional form: system moves plus the mode update
/// applied when the environment moves.
class controller {
public:
  virtual ~controller() = default;
  virtual std::size_t goal_modes() const = 0;
  virtual std::size_t assumption_modes() const = 0;
  virtual moded_state sys_move(const moded_state& at) const = 0;
  virtual mode env_update(const moded_state& at, state_id to) const = 0;
};

/// Explicit Mealy table restricted to the triples reachable from `init`.
struct mealy_strategy {
  std::size_t n = 1;
  std::size_t m = 1;
  moded_state init;
  std::map<moded_state, moded_state> sys_moves;
  std::map<std::pair<moded_state, state_id>, mode> env_updates;

  bool operator==(const mealy_strategy&) const = default;
};

/// Explores every compliant play from `init` and tabulates the controller.
mealy_strategy materialize(const game_graph& g, const controller& c, const moded_state& init);

/// Successor choice per system state; nullopt outside the winning region.
struct memoryless_strategy {
  std::vector<std::optional<state_id>> choice;
  bool operator==(const memoryless_strategy&) const = default;
};

class memoryless_controller : public controller {
public:
  explicit memoryless_controller(const memoryless_strategy& s) : s_(s) {}
  std::size_t goal_modes() const override { return 1; }
  std::size_t assumption_modes() const override { return 1; }
  moded_state sys_move(const moded_state& at) const override;
  mode env_update(const moded_state&, state_id) const override { return {}; }

private:
  const memoryless_strategy& s_;
};

/// System moves first (ordered by state, a, b), then environment mode updates
/// (ordered by state, a, b, target).
std::string serialize_strategy(const game_graph& g, const mealy_strategy& s);
nlohmann::json strategy_to_json(const game_graph& g, const mealy_strategy& s);
mealy_strategy parse_strategy(const game_graph& g, std::string_view text);
mealy_strategy strategy_from_json(const game_graph& g, const nlohmann::json& doc);

}  // namespace ncgr1
