#include "ncgr1/service.hpp"

#include <regex>

#include "ncgr1/maze.hpp"
#include "ncgr1/solve.hpp"

namespace ncgr1 {

using nlohmann::json;

namespace {

service::reply error(int status, const std::string& msg) { return {status, json{{"error", msg}}}; }

game_file game_of(const json& req) {
  if (!req.contains("game")) throw game_format_error("request has no \"game\"");
  return game_from_json(req["game"]);
}

bool precheck_flag(const json& req) {
  if (!req.contains("precheck")) return true;
  const json& p = req["precheck"];
  if (p.is_boolean()) return p.get<bool>();
  if (p.is_string() && p == "auto") return true;
  if (p.is_string() && p == "off") return false;
  throw std::invalid_argument("precheck must be \"auto\" or \"off\"");
}

json failed_json(const std::vector<std::size_t>& failed) {
  json out = json::array();
  for (auto b : failed) out.push_back(b + 1);
  return out;
}

maze_params maze_of(const std::map<std::string, std::string>& q) {
  auto num = [&](const char* key, int dflt) {
    auto it = q.find(key);
    if (it == q.end()) return dflt;
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      throw maze_param_error(std::string("parameter ") + key + " must be an integer");
    }
  };
  maze_params p;
  p.cols = num("cols", 3);
  p.lines = num("lines", 2);
  p.goals = num("goals", 2);
  if (auto it = q.find("variant"); it != q.end()) p.variant = parse_maze_variant(it->second);
  return p;
}

json layout_json(const maze_instance& m) {
  auto cells = [](const std::vector<cell>& v) {
    json out = json::array();
    for (cell c : v) out.push_back({c.col, c.row});
    return out;
  };
  return {{"cols", m.params.cols},
          {"lines", m.params.lines},
          {"passageColumn", m.passage_col},
          {"variant", to_string(m.params.variant)},
          {"robotGoals", cells(m.robot_goals)},
          {"obstacleGoals", cells(m.obstacle_goals)}};
}

}  // namespace

service::reply service::solve(const json& req) {
  const game_file game = game_of(req);
  solve_request sr;
  sr.algo = parse_algorithm(req.value("algo", std::string("4fp")));
  sr.precheck = precheck_flag(req);
  const solve_outcome out = solve_game(game.graph, game.spec, sr);
  json body;
  body["realizable"] = out.realizable;
  body["algorithm"] = to_string(sr.algo);
  body["failedAssumptions"] = failed_json(out.failed_assumptions);
  body["strategy"] = out.strategy ? strategy_to_json(game.graph, *out.strategy) : json(nullptr);
  if (!out.message.empty()) body["message"] = out.message;
  return {200, body};
}

service::reply service::create_session(const json& req) {
  game_file game;
  if (req.contains("maze")) {
    std::map<std::string, std::string> q;
    for (auto& [k, v] : req["maze"].items()) q[k] = v.is_string() ? v.get<std::string>() : v.dump();
    game = maze_generate(maze_of(q)).game;
  } else {
    game = game_of(req);
  }
  std::unique_ptr<play_session> s;
  if (req.contains("strategy") && !req["strategy"].is_null()) {
    s = std::make_unique<play_session>(game, strategy_from_json(game.graph, req["strategy"]));
  } else {
    solve_request sr;
    sr.precheck = precheck_flag(req);
    solve_outcome out = solve_game(game.graph, game.spec, sr);
    if (!out.realizable) return {422, json{{"error", out.message}, {"failedAssumptions", failed_json(out.failed_assumptions)}}};
    s = std::make_unique<play_session>(game, std::move(*out.strategy), std::move(out.ranks));
  }
  auto sl = std::make_shared<slot>();
  sl->session = std::move(s);
  json view = sl->session->view();
  std::string id;
  {
    std::lock_guard lock(mu_);
    id = "s" + std::to_string(next_id_++);
    sessions_[id] = sl;
  }
  return {201, json{{"id", id}, {"view", view}}};
}

service::reply service::env_move(const std::string& id, const json& req) {
  std::shared_ptr<slot> sl;
  {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return error(404, "unknown session '" + id + "'");
    sl = it->second;
  }
  if (!req.contains("to") || !req["to"].is_string()) return error(400, "request needs a state id in \"to\"");
  std::lock_guard lock(sl->mu);
  try {
    return {200, sl->session->env_move(req["to"].get<std::string>())};
  } catch (const illegal_move& e) {
    return {409, json{{"error", e.what()}, {"legalEnvMoves", e.legal()}}};
  }
}

service::reply service::maze(const std::map<std::string, std::string>& query) {
  const maze_instance m = maze_generate(maze_of(query));
  solve_request sr;
  if (auto it = query.find("algo"); it != query.end()) sr.algo = parse_algorithm(it->second);
  if (auto it = query.find("precheck"); it != query.end()) sr.precheck = precheck_flag(json{{"precheck", it->second}});
  const solve_outcome out = solve_game(m.game.graph, m.game.spec, sr);
  json body;
  body["game"] = game_to_json(m.game.graph, m.game.spec);
  body["strategy"] = out.strategy ? strategy_to_json(m.game.graph, *out.strategy) : json(nullptr);
  body["realizable"] = out.realizable;
  body["layout"] = layout_json(m);
  return {200, body};
}

service::reply service::handle(const std::string& method, const std::string& path,
                               const std::map<std::string, std::string>& query, const std::string& body) {
  static const std::regex move_route(R"(^/session/([A-Za-z0-9_-]+)/env-move$)");
  try {
    json req;
    if (method == "POST") {
      try {
        req = body.empty() ? json::object() : json::parse(body);
      } catch (const json::parse_error& e) {
        return error(400, "malformed JSON body at " + describe_json_error(body, e));
      }
      if (!req.is_object()) return error(400, "request body must be a JSON object");
    }
    std::smatch m;
    if (method == "POST" && path == "/solve") return solve(req);
    if (method == "POST" && path == "/session") return create_session(req);
    if (method == "POST" && std::regex_match(path, m, move_route)) return env_move(m[1].str(), req);
    if (method == "GET" && path == "/maze") return maze(query);
    return error(404, "no route for " + method + " " + path);
  } catch (const game_format_error& e) {
    return error(400, e.what());
  } catch (const strategy_format_error& e) {
    return error(400, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

}  // namespace ncgr1
