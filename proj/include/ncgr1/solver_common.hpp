#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ncgr1 {

class solve_timeout : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct solve_options {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void poll() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw solve_timeout("solver deadline exceeded");
  }
};

/// Loop counters of one nested fixed-point evaluation.
struct fixpoint_stats {
  std::uint64_t z_iterations = 0;
  std::uint64_t y_iterations = 0;
  std::uint64_t x_iterations = 0;
  std::uint64_t w_iterations = 0;
  std::uint64_t pre_calls = 0;
  /// Pre-operator calls attributed to each (a, b) line, index a * m + b.
  std::vector<std::uint64_t> line_pre_calls;

  std::uint64_t iterations() const { return z_iterations + y_iterations + x_iterations + w_iterations; }
};

/// Lexicographically ordered (i, j); i == 0 means undefined.
struct rank {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  bool defined() const { return i != 0; }
  auto operator<=>(const rank&) const = default;
};

}  // namespace ncgr1
