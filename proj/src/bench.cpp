#include "ncgr1/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ncgr1/verifier.hpp"

namespace ncgr1 {

std::vector<bench_row> run_benchmark(const std::vector<bench_instance>& instances, const std::vector<algorithm>& algos,
                                     const bench_options& opt) {
  using clock = std::chrono::steady_clock;
  std::vector<bench_row> rows;
  for (const auto& inst : instances) {
    const maze_instance maze = maze_generate(inst.params);
    const auto& g = maze.game.graph;
    for (algorithm algo : algos) {
      bench_row row;
      row.instance = inst.name.empty() ? describe(inst.params) : inst.name;
      row.algo = algo;
      row.q = g.size();
      solve_request req;
      req.algo = algo;
      req.precheck = opt.precheck;
      const auto start = clock::now();
      if (opt.timeout) req.options.deadline = start + *opt.timeout;
      try {
        const solve_outcome out = solve_game(g, maze.game.spec, req);
        row.ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        row.realizable = out.realizable;
        row.status = out.realizable ? "yes" : "no";
        row.iterations = out.stats.iterations();
        row.pre_calls = out.stats.pre_calls;
        row.lines = out.stats.line_pre_calls.size();
        if (out.strategy) {
          const auto cl = build_closed_loop(g, *out.strategy);
          row.states = cl.env_node_count(g);
          row.falsifying = detect_falsifying(cl, maze.game.spec);
          row.gr1_holds = check_gr1_holds(cl, maze.game.spec).holds;
        }
      } catch (const solve_timeout&) {
        row.ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        row.status = "timeout";
      } catch (const std::invalid_argument& e) {
        row.status = "n/a";
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bench_plan parse_bench_plan(const nlohmann::json& doc) {
  bench_plan plan;
  if (!doc.is_object() || !doc.contains("instances") || !doc["instances"].is_array())
    throw std::invalid_argument("bench plan needs an \"instances\" array");
  for (const auto& i : doc["instances"]) {
    bench_instance inst;
    inst.params.cols = i.value("cols", 3);
    inst.params.lines = i.value("lines", 2);
    inst.params.goals = i.value("goals", 2);
    inst.params.variant = parse_maze_variant(i.value("variant", std::string("falsifiable")));
    inst.name = i.value("name", describe(inst.params));
    plan.instances.push_back(std::move(inst));
  }
  if (doc.contains("algorithms")) {
    for (const auto& a : doc["algorithms"]) plan.algos.push_back(parse_algorithm(a.get<std::string>()));
  } else {
    plan.algos = {algorithm::classic, algorithm::fourfold, algorithm::heuristic};
  }
  plan.options.precheck = doc.value("precheck", false);
  if (doc.contains("timeout_ms")) plan.options.timeout = std::chrono::milliseconds(doc["timeout_ms"].get<long long>());
  return plan;
}

namespace {

std::vector<std::vector<std::string>> cells(const std::vector<bench_row>& rows) {
  std::vector<std::vector<std::string>> out{
      {"instance", "algorithm", "realizable", "states", "falsifying", "ms", "iterations"}};
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(2) << r.ms;
    const bool solved = r.status == "yes";
    out.push_back({r.instance, to_string(r.algo), r.status, solved ? std::to_string(r.states) : "-",
                   solved ? (r.falsifying ? "yes" : "no") : "-", r.status == "n/a" ? "-" : ms.str(),
                   r.status == "yes" || r.status == "no" ? std::to_string(r.iterations) : "-"});
  }
  return out;
}

}  // namespace

std::string bench_csv(const std::vector<bench_row>& rows) {
  std::ostringstream os;
  for (const auto& line : cells(rows)) {
    for (std::size_t k = 0; k < line.size(); ++k) os << (k ? "," : "") << line[k];
    os << '\n';
  }
  return os.str();
}

std::string bench_table(const std::vector<bench_row>& rows) {
  const auto data = cells(rows);
  std::vector<std::size_t> width(data.front().size(), 0);
  for (const auto& line : data)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < data.size(); ++r) {
    for (std::size_t k = 0; k < data[r].size(); ++k) {
      if (k) os << "  ";
      if (k < 3) os << std::left;
      else os << std::right;
      os << std::setw(static_cast<int>(width[k])) << data[r][k];
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
  return os.str();
}

}  // namespace ncgr1
