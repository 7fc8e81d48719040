#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgr1/game_io.hpp"
#include "ncgr1/strategy.hpp"
#include "ncgr1/vector.hpp"

namespace ncgr1 {

class illegal_move : public std::invalid_argument {
public:
  illegal_move(const std::string& msg, std::vector<std::string> legal)
      : std::invalid_argument(msg), legal_(std::move(legal)) {}
  const std::vector<std::string>& legal() const { return legal_; }

private:
  std::vector<std::string> legal_;
};

/// Step-by-step play against a strategy. The session always rests at an
/// environment state; the user picks the environment move and the strategy
/// answers.
class play_session {
public:
  play_session(game_file game, mealy_strategy strategy, std::optional<moded_rank_table> ranks = std::nullopt);

  nlohmann::json view() const;
  /// Applies the environment move and the system reply; returns
  /// {"envMove", "sysMove", "view"}.
  nlohmann::json env_move(const std::string& to);

  const game_file& game() const { return game_; }
  const moded_state& position() const { return at_; }
  std::vector<std::string> legal_env_moves() const;

private:
  void count(state_id q);

  game_file game_;
  mealy_strategy strategy_;
  std::optional<moded_rank_table> ranks_;
  moded_state at_;
  std::vector<std::uint64_t> fa_visits_;
  std::vector<std::uint64_t> fg_visits_;
  std::uint64_t steps_ = 0;
};

}  // namespace ncgr1
