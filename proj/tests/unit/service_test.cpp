#include <doctest.h>
#include <httplib.h>

#include <thread>

#include "ncgr1/canonical.hpp"
#include "ncgr1/maze.hpp"
#include "ncgr1/service.hpp"

using namespace ncgr1;
using nlohmann::json;

namespace {

json ex0_json() {
  const game_file f = canonical::ex0();
  return game_to_json(f.graph, f.spec);
}

service::reply post(service& s, const std::string& path, const json& body) {
  return s.handle("POST", path, {}, body.dump());
}

}  // namespace

TEST_CASE("solve endpoint") {
  service s;
  const auto r = post(s, "/solve", {{"game", ex0_json()}});
  CHECK(r.status == 200);
  CHECK(r.body["realizable"] == true);
  CHECK(r.body["strategy"]["kind"] == "moded");

  const auto ex1 = canonical::ex1();
  const auto r1 = post(s, "/solve", {{"game", game_to_json(ex1.graph, ex1.spec)}, {"precheck", "auto"}});
  CHECK(r1.body["failedAssumptions"] == json::array({1}));

  const auto off = post(s, "/solve", {{"game", game_to_json(ex1.graph, ex1.spec)}, {"algo", "3fp"}});
  CHECK(off.body["algorithm"] == "3fp");
}

TEST_CASE("request errors") {
  service s;
  CHECK(s.handle("POST", "/solve", {}, "{not json").status == 400);
  CHECK(post(s, "/solve", json::object()).status == 400);
  CHECK(post(s, "/solve", {{"game", ex0_json()}, {"algo", "7fp"}}).status == 400);
  CHECK(s.handle("GET", "/nowhere", {}, "").status == 404);
  CHECK(post(s, "/session/s99/env-move", {{"to", "a"}}).status == 404);
  CHECK(s.handle("GET", "/maze", {{"cols", "x"}}, "").status == 400);
  CHECK(s.handle("GET", "/maze", {{"goals", "3"}}, "").status == 400);
}

TEST_CASE("unrealizable sessions are refused") {
  service s;
  json game = ex0_json();
  game["guarantees"] = json::array({json::array()});
  const auto r = post(s, "/session", {{"game", game}});
  CHECK(r.status == 422);
}

TEST_CASE("maze session play") {
  service s;
  const auto created = post(s, "/session", {{"maze", {{"cols", 3}, {"lines", 2}}}});
  REQUIRE(created.status == 201);
  const std::string id = created.body["id"];
  const json view = created.body["view"];
  CHECK(view["state"] == "e/r2,0/o0,0");
  CHECK(view["mode"] == json{{"a", 1}, {"b", 1}});
  CHECK(view["satisfiedAssumptions"].size() == 2);

  const auto illegal = post(s, "/session/" + id + "/env-move", {{"to", "s/r2,0/o1,1"}});
  CHECK(illegal.status == 409);
  CHECK(illegal.body["legalEnvMoves"] == view["legalEnvMoves"]);

  // Walk the obstacle around its tour; the robot has to reach both goals.
  json last;
  for (int step = 0; step < 40; ++step) {
    const json legal = (step == 0 ? view : last["view"])["legalEnvMoves"];
    REQUIRE_FALSE(legal.empty());
    const std::string to = legal[static_cast<std::size_t>(step) % legal.size()];
    const auto mv = post(s, "/session/" + id + "/env-move", {{"to", to}});
    REQUIRE(mv.status == 200);
    CHECK(mv.body["sysMove"]["from"] == to);
    last = mv.body;
  }
  CHECK(last["view"]["steps"] == 40);
  CHECK(post(s, "/session/" + id + "/env-move", json::object()).status == 400);
}

TEST_CASE("maze endpoint") {
  service s;
  const auto r = s.handle("GET", "/maze", {{"cols", "4"}, {"variant", "nonfalsifiable"}, {"algo", "3fp"}}, "");
  REQUIRE(r.status == 200);
  CHECK(r.body["realizable"] == true);
  CHECK(r.body["layout"]["cols"] == 4);
  CHECK(r.body["layout"]["passageColumn"] == 2);
  CHECK(r.body["game"]["states"].size() == 2 * 8 * 7);
}

TEST_CASE("live http server") {
  service svc;
  http_server server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread loop([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/solve", json{{"game", ex0_json()}}.dump(), "application/json");
  if (res) {
    CHECK(res->status == 200);
    CHECK(json::parse(res->body)["realizable"] == true);
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  }
  auto bad = client.Post("/session", "[", "application/json");
  if (bad) CHECK(bad->status == 400);
  auto maze = client.Get("/maze?cols=3&lines=2");
  if (maze) CHECK(json::parse(maze->body)["layout"]["lines"] == 2);

  server.stop();
  loop.join();
  REQUIRE(res);
  REQUIRE(bad);
  REQUIRE(maze);
}
