#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncgr1/game.hpp"

namespace ncgr1 {

class game_format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct game_file {
  game_graph graph;
  gr1_spec spec;
};

/// Parses the JSON game format. Structural violations are reported as
/// game_format_error, syntax errors carry line and column.
game_file parse_game(std::string_view text);
game_file game_from_json(const nlohmann::json& doc);

/// Canonical line-oriented rendering: edges sorted by (source, target) id,
/// set members in id order.
std::string serialize_game(const game_graph& g, const gr1_spec& s);
nlohmann::json game_to_json(const game_graph& g, const gr1_spec& s);

game_file load_game_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "line L, column C: message" for a JSON syntax error.
std::string describe_json_error(std::string_view text, const nlohmann::json::parse_error& e);

}  // namespace ncgr1
