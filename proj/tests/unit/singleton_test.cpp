#include <doctest.h>

#include <random>

#include "ncgr1/canonical.hpp"
#include "ncgr1/classic.hpp"
#include "ncgr1/singleton.hpp"
#include "ncgr1/verifier.hpp"
#include "support.hpp"

using namespace ncgr1;

namespace {

rank_table solve(const game_file& f) { return solve_4fp_singleton(f.graph, f.spec.assumptions[0], f.spec.guarantees[0]); }

}  // namespace

TEST_CASE("ranks on the smallest game") {
  const game_file f = canonical::ex0();
  const rank_table t = solve(f);
  const state_id a = *f.graph.find("a"), b = *f.graph.find("b");
  CHECK(t.winning == f.graph.all());
  CHECK(t.at(b) == rank{1, 1});
  CHECK(t.at(a) == rank{2, 1});
  CHECK(classify_rank(t, b).kind == rank_kind::goal);
  const rank_class ca = classify_rank(t, a);
  CHECK(ca.kind == rank_kind::assumption);
  CHECK(ca.i == 2);
  const memoryless_strategy s = extract_strategy_singleton(f.graph, t);
  CHECK(s.choice[b] == a);
  CHECK_FALSE(s.choice[a].has_value());
}

TEST_CASE("ranks on ex1") {
  const game_file f = canonical::ex1();
  const rank_table t = solve(f);
  const state_id a0 = *f.graph.find("a0"), a1 = *f.graph.find("a1"), b0 = *f.graph.find("b0"),
                 b1 = *f.graph.find("b1");
  CHECK(t.winning == f.graph.all());
  CHECK(t.at(b0) == rank{1, 1});
  CHECK(t.at(a0) == rank{1, 2});
  CHECK(t.at(b1) == rank{1, 3});
  CHECK(t.at(a1) == rank{2, 1});
  const rank_class c = classify_rank(t, a0);
  CHECK(c.kind == rank_kind::progress);
  CHECK(c.i == 1);
  CHECK(c.j == 2);
  const memoryless_strategy s = extract_strategy_singleton(f.graph, t);
  CHECK(s.choice[b0] == a0);
  CHECK(s.choice[b1] == a0);
  CHECK(solve_4fp_negated(f.graph, f.spec.assumptions[0], f.spec.guarantees[0]).empty());
  CHECK(solve_4fp_negated(canonical::ex0().graph, canonical::ex0().spec.assumptions[0],
                          canonical::ex0().spec.guarantees[0])
            .empty());
}

TEST_CASE("trap states are won only classically") {
  const game_file f = canonical::trap_pair();
  const rank_table t = solve(f);
  const classic_result c = solve_3fp(f.graph, f.spec);
  const state_id q8 = *f.graph.find("q8"), q9 = *f.graph.find("q9");
  CHECK(c.winning.contains(q8));
  CHECK(c.winning.contains(q9));
  CHECK_FALSE(t.winning.contains(q8));
  CHECK_FALSE(t.winning.contains(q9));
  CHECK(t.winning.contains(f.graph.init()));
  CHECK(t.winning.is_subset_of(c.winning));
}

TEST_CASE("rank invariants and determinacy on random games") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const game_file f = testing::random_game(rng, {.max_states = 32});
    const rank_table t = solve(f);
    const auto v = testing::singleton_rank_violations(f.graph, t);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
    CHECK(solve_4fp_negated(f.graph, f.spec.assumptions[0], f.spec.guarantees[0]) == f.graph.all() - t.winning);
    CHECK(t.winning.is_subset_of(solve_3fp(f.graph, f.spec).winning));
  }
}

TEST_CASE("extracted strategies decrease the rank and stay winning") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 200; ++k) {
    const game_file f = testing::random_game(rng, {.max_states = 32});
    const rank_table t = solve(f);
    if (t.winning.empty()) continue;
    const memoryless_strategy s = extract_strategy_singleton(f.graph, t);
    t.winning.for_each([&](state_id q) {
      if (f.graph.owner(q) != player::sys) return;
      REQUIRE(s.choice[q].has_value());
      CHECK(t.winning.contains(*s.choice[q]));
      if (t.at(q) != rank{1, 1}) CHECK(t.at(*s.choice[q]) < t.at(q));
    });
    if (!t.winning.contains(f.graph.init())) continue;
    const closed_loop_graph cl = build_closed_loop(f.graph, s);
    for (const auto& node : cl.nodes) CHECK(t.winning.contains(node.state));
    CHECK(check_gr1_holds(cl, f.spec).holds);
  }
}
