#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgr1/maze.hpp"
#include "ncgr1/solve.hpp"

namespace ncgr1 {

struct bench_instance {
  std::string name;
  maze_params params;
};

struct bench_options {
  bool precheck = false;
  std::optional<std::chrono::milliseconds> timeout;
};

struct bench_row {
  std::string instance;
  algorithm algo = algorithm::fourfold;
  std::string status;  // "yes", "no", "timeout" or "n/a"
  bool realizable = false;
  std::size_t q = 0;        // arena size
  std::size_t states = 0;   // environment nodes of the closed loop
  bool falsifying = false;
  bool gr1_holds = false;
  double ms = 0;
  std::uint64_t iterations = 0;
  std::uint64_t pre_calls = 0;
  std::size_t lines = 0;    // (a, b) lines evaluated
  std::string note;
};

std::vector<bench_row> run_benchmark(const std::vector<bench_instance>& instances, const std::vector<algorithm>& algos,
                                     const bench_options& opt = {});

/// {"instances": [{"name", "cols", "lines", "goals", "variant"}], "algorithms": [...],
///  "precheck": bool, "timeout_ms": int}
struct bench_plan {
  std::vector<bench_instance> instances;
  std::vector<algorithm> algos;
  bench_options options;
};
bench_plan parse_bench_plan(const nlohmann::json& doc);

std::string bench_csv(const std::vector<bench_row>& rows);
std::string bench_table(const std::vector<bench_row>& rows);

}  // namespace ncgr1
