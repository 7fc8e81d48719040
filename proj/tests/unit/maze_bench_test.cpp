#include <doctest.h>

#include <algorithm>

#include "ncgr1/bench.hpp"
#include "ncgr1/maze.hpp"
#include "ncgr1/solve.hpp"
#include "ncgr1/verifier.hpp"

using namespace ncgr1;

namespace {

std::size_t count_states(int cols, int lines) {
  const std::size_t cells = static_cast<std::size_t>(cols * lines);
  return 2 * cells * (cells - 1);
}

bool falsifying(const maze_instance& m, algorithm algo) {
  solve_request req;
  req.algo = algo;
  req.precheck = false;
  const solve_outcome out = solve_game(m.game.graph, m.game.spec, req);
  REQUIRE(out.realizable);
  const closed_loop_graph cl = build_closed_loop(m.game.graph, *out.strategy);
  CHECK(check_gr1_holds(cl, m.game.spec).holds);
  return detect_falsifying(cl, m.game.spec);
}

}  // namespace

TEST_CASE("maze sizes") {
  const maze_instance m = maze_generate({});
  CHECK(m.game.graph.size() == 60);
  CHECK(m.game.graph.size() == count_states(3, 2));
  CHECK(m.game.spec.assumptions.size() == 2);
  CHECK(m.game.spec.guarantees.size() == 2);
  CHECK(validate(m.game.graph, m.game.spec).empty());
  CHECK(m.game.graph.name(m.game.graph.init()) == "e/r2,0/o0,0");
  CHECK(maze_generate({5, 2, 2, maze_variant::nonfalsifiable}).game.graph.size() == count_states(5, 2));
  CHECK(maze_generate({3, 4, 4, maze_variant::falsifiable}).game.graph.size() == count_states(3, 4));
}

TEST_CASE("maze walls") {
  const maze_instance m = maze_generate({});
  CHECK(m.passage_col == 1);
  CHECK(maze_wall_above(m, {0, 0}));
  CHECK_FALSE(maze_wall_above(m, {1, 0}));
  CHECK(maze_wall_above(m, {2, 0}));
  CHECK_FALSE(maze_wall_above(m, {0, 1}));
}

TEST_CASE("maze parameter errors") {
  CHECK_THROWS_AS(maze_generate({1, 2, 1}), maze_param_error);
  CHECK_THROWS_WITH_AS(maze_generate({3, 2, 3}), doctest::Contains("goal cells do not fit"), maze_param_error);
  CHECK_THROWS_AS(maze_generate({3, 2, 0}), maze_param_error);
  CHECK_THROWS_AS(parse_maze_variant("sticky"), maze_param_error);
  CHECK(parse_maze_variant("nf") == maze_variant::nonfalsifiable);
  CHECK(describe({3, 2, 2, maze_variant::falsifiable}) == "3/2/2/f");
}

TEST_CASE("falsifiable maze separates the classic and four-nested strategies") {
  const maze_instance m = maze_generate({3, 2, 2, maze_variant::falsifiable});
  CHECK(falsifying(m, algorithm::classic));
  CHECK_FALSE(falsifying(m, algorithm::fourfold));
  CHECK_FALSE(falsifying(m, algorithm::heuristic));
}

TEST_CASE("non-falsifiable maze gives unstarred strategies everywhere") {
  const maze_instance m = maze_generate({3, 2, 2, maze_variant::nonfalsifiable});
  CHECK_FALSE(falsifying(m, algorithm::classic));
  CHECK_FALSE(falsifying(m, algorithm::fourfold));
  CHECK_FALSE(falsifying(m, algorithm::heuristic));
}

TEST_CASE("benchmark rows and reports") {
  const std::vector<bench_instance> inst{{"3/2", {3, 2, 2, maze_variant::falsifiable}},
                                         {"4/2", {4, 2, 2, maze_variant::nonfalsifiable}}};
  const std::vector<algorithm> algos{algorithm::classic, algorithm::fourfold, algorithm::heuristic};
  const auto rows = run_benchmark(inst, algos);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.status == "yes");
    CHECK(r.gr1_holds);
    CHECK(r.states > 0);
    CHECK(r.pre_calls > 0);
  }
  CHECK(rows[0].falsifying);
  CHECK_FALSE(rows[1].falsifying);
  const std::string csv = bench_csv(rows);
  CHECK(csv.rfind("instance,algorithm,realizable,states,falsifying,ms,iterations\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(bench_table(rows).find("4fp-heuristic") != std::string::npos);
}

TEST_CASE("bench plan parsing") {
  const bench_plan p = parse_bench_plan(nlohmann::json::parse(
      R"({"instances":[{"cols":3,"lines":2,"goals":2,"variant":"nf"}],"algorithms":["3fp","4fp"],"timeout_ms":500})"));
  REQUIRE(p.instances.size() == 1);
  CHECK(p.instances[0].params.variant == maze_variant::nonfalsifiable);
  CHECK(p.algos.size() == 2);
  REQUIRE(p.options.timeout.has_value());
  CHECK(p.options.timeout->count() == 500);
  CHECK_THROWS(parse_bench_plan(nlohmann::json::parse(R"({"algorithms":["3fp"]})")));
}

TEST_CASE("timeouts are recorded per cell") {
  bench_options opt;
  opt.timeout = std::chrono::milliseconds(0);
  const auto rows = run_benchmark({{"big", {9, 2, 2, maze_variant::falsifiable}}}, {algorithm::fourfold}, opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "timeout");
}
