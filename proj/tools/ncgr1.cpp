// Command-line front end: solve, verify, maze, bench, simulate, serve.

#include <CLI11.hpp>

#include <csignal>
#include <iostream>
#include <string>

#include "ncgr1/bench.hpp"
#include "ncgr1/game_io.hpp"
#include "ncgr1/maze.hpp"
#include "ncgr1/service.hpp"
#include "ncgr1/session.hpp"
#include "ncgr1/solve.hpp"
#include "ncgr1/verifier.hpp"

namespace {

using namespace ncgr1;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + std::to_string(v[k] + 1);
  return out;
}

bool precheck_mode(const std::string& s) {
  if (s == "auto") return true;
  if (s == "off") return false;
  throw usage_error("--precheck must be auto or off");
}

int cmd_solve(const std::string& algo, const std::string& in, const std::string& out, const std::string& precheck) {
  const game_file game = load_game_file(in);
  solve_request req;
  req.algo = parse_algorithm(algo);
  req.precheck = precheck_mode(precheck);
  const solve_outcome res = solve_game(game.graph, game.spec, req);
  if (!res.failed_assumptions.empty())
    std::cout << "precheck: assumption(s) " << join_indices(res.failed_assumptions)
              << " not implied by the guarantees; guarantees augmented\n";
  std::cout << "states: " << game.graph.size() << ", iterations: " << res.stats.iterations()
            << ", pre calls: " << res.stats.pre_calls << "\n";
  if (!res.realizable) {
    std::cout << res.message << "\n";
    return exit_failed;
  }
  std::cout << "realizable from initial state " << game.graph.name(game.graph.init()) << " (" << to_string(req.algo)
            << ")\n";
  const std::string text = serialize_strategy(game.graph, *res.strategy);
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
  return exit_ok;
}

int cmd_verify(const std::string& game_path, const std::string& strategy_path) {
  const game_file game = load_game_file(game_path);
  const mealy_strategy strat = parse_strategy(game.graph, read_text_file(strategy_path));
  const closed_loop_graph cl = build_closed_loop(game.graph, strat);
  std::cout << "closed loop: " << cl.size() << " nodes\n";

  const gr1_verdict gr1 = check_gr1_holds(cl, game.spec);
  if (gr1.holds) {
    std::cout << "GR(1) satisfaction: PASSED\n";
  } else {
    std::cout << "GR(1) satisfaction: FAILED (guarantee " << gr1.missed_goal + 1 << " missed; counterexample "
              << lasso_json(game.graph, cl, *gr1.counterexample).dump() << ")\n";
  }
  const nonconflict_verdict nc = check_nonconflicting(cl, game.spec);
  if (nc.holds) std::cout << "non-conflictingness: PASSED\n";
  else std::cout << "non-conflictingness: FAILED (stuck node " << describe_node(game.graph, cl, *nc.stuck) << ")\n";
  std::cout << "assumption falsification possible: " << (nc.holds ? "no" : "yes") << "\n";
  std::cout << "guarantee cycle reachable: " << (has_goal_cycle(cl, game.spec) ? "yes" : "no") << "\n";
  return gr1.holds && nc.holds ? exit_ok : exit_failed;
}

int cmd_maze(const maze_params& p, const std::string& out) {
  const maze_instance m = maze_generate(p);
  const std::string text = serialize_game(m.game.graph, m.game.spec);
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
  std::cerr << "maze " << describe(p) << ": " << m.game.graph.size() << " states\n";
  return exit_ok;
}

int cmd_bench(const std::string& spec_path, const std::string& csv) {
  nlohmann::json doc;
  const std::string text = read_text_file(spec_path);
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error("malformed bench plan at " + describe_json_error(text, e));
  }
  const bench_plan plan = parse_bench_plan(doc);
  const auto rows = run_benchmark(plan.instances, plan.algos, plan.options);
  std::cout << bench_table(rows);
  if (!csv.empty()) write_text_file(csv, bench_csv(rows));
  return exit_ok;
}

void print_view(const nlohmann::json& v) {
  std::cout << "at " << v["state"].get<std::string>() << "  mode (a=" << v["mode"]["a"] << ", b=" << v["mode"]["b"]
            << ")  rank " << (v["rank"].is_null() ? std::string("-") : v["rank"].dump()) << "\n  assumption visits "
            << v["satisfiedAssumptions"].dump() << "  guarantee visits " << v["satisfiedGuarantees"].dump()
            << "\n  environment moves: ";
  for (const auto& m : v["legalEnvMoves"]) std::cout << m.get<std::string>() << ' ';
  std::cout << "\n";
}

int cmd_simulate(const std::string& game_path, const std::string& strategy_path, const std::string& precheck) {
  game_file game = load_game_file(game_path);
  std::unique_ptr<play_session> s;
  if (!strategy_path.empty()) {
    auto strat = parse_strategy(game.graph, read_text_file(strategy_path));
    s = std::make_unique<play_session>(std::move(game), std::move(strat));
  } else {
    solve_request req;
    req.precheck = precheck_mode(precheck);
    solve_outcome out = solve_game(game.graph, game.spec, req);
    if (!out.realizable) {
      std::cout << out.message << "\n";
      return exit_failed;
    }
    s = std::make_unique<play_session>(std::move(game), std::move(*out.strategy), std::move(out.ranks));
  }
  print_view(s->view());
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    if (line.empty()) continue;
    if (line == "quit" || line == "q") break;
    try {
      const auto step = s->env_move(line);
      std::cout << "system: " << step["sysMove"]["from"].get<std::string>() << " -> "
                << step["sysMove"]["to"].get<std::string>() << "\n";
      print_view(step["view"]);
    } catch (const illegal_move& e) {
      std::cout << e.what() << "; legal: ";
      for (const auto& m : e.legal()) std::cout << m << ' ';
      std::cout << "\n";
    }
  }
  return exit_ok;
}

http_server* active_server = nullptr;

int cmd_serve(const std::string& host, int port) {
  service svc;
  http_server server(svc);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return exit_usage;
  }
  std::cout << "listening on http://" << host << ":" << bound << "\n" << std::flush;
  active_server = &server;
  std::signal(SIGINT, [](int) {
    if (active_server) active_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (active_server) active_server->stop();
  });
  server.listen();
  active_server = nullptr;
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit-state GR(1) synthesis with non-conflicting strategies"};
  app.require_subcommand(1);

  std::string algo = "4fp", in, out, precheck = "auto";
  auto* solve = app.add_subcommand("solve", "Solve a game and write a strategy");
  solve->add_option("--algo", algo, "3fp | 4fp | 4fp-heuristic")->check(CLI::IsMember({"3fp", "4fp", "4fp-heuristic"}));
  solve->add_option("--in", in, "Game file")->required();
  solve->add_option("--out", out, "Strategy file (stdout when omitted)");
  solve->add_option("--precheck", precheck, "auto | off")->check(CLI::IsMember({"auto", "off"}));

  std::string game_path, strategy_path;
  auto* verify = app.add_subcommand("verify", "Check a strategy against its game");
  verify->add_option("--game", game_path, "Game file")->required();
  verify->add_option("--strategy", strategy_path, "Strategy file")->required();

  maze_params mp;
  std::string variant = "falsifiable", maze_out;
  auto* maze = app.add_subcommand("maze", "Generate a maze game");
  maze->add_option("--cols", mp.cols)->default_val(3);
  maze->add_option("--lines", mp.lines)->default_val(2);
  maze->add_option("--goals", mp.goals)->default_val(2);
  maze->add_option("--variant", variant, "falsifiable | nonfalsifiable")->default_val("falsifiable");
  maze->add_option("--out", maze_out, "Game file (stdout when omitted)");

  std::string bench_spec, csv;
  auto* bench = app.add_subcommand("bench", "Run a benchmark plan");
  bench->add_option("--spec", bench_spec, "Bench plan JSON")->required();
  bench->add_option("--csv", csv, "CSV output file");

  std::string sim_game, sim_strategy, sim_precheck = "auto";
  auto* simulate = app.add_subcommand("simulate", "Play the environment against a strategy on stdin");
  simulate->add_option("--game", sim_game, "Game file")->required();
  simulate->add_option("--strategy", sim_strategy, "Strategy file (solved with 4fp when omitted)");
  simulate->add_option("--precheck", sim_precheck, "auto | off")->check(CLI::IsMember({"auto", "off"}));

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--port", port)->default_val(8080);
  serve->add_option("--host", host)->default_val("127.0.0.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*solve) return cmd_solve(algo, in, out, precheck);
    if (*verify) return cmd_verify(game_path, strategy_path);
    if (*maze) {
      mp.variant = parse_maze_variant(variant);
      return cmd_maze(mp, maze_out);
    }
    if (*bench) return cmd_bench(bench_spec, csv);
    if (*simulate) return cmd_simulate(sim_game, sim_strategy, sim_precheck);
    if (*serve) return cmd_serve(host, port);
  } catch (const strategy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
