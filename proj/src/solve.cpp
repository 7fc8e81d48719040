#include "ncgr1/solve.hpp"

#include "ncgr1/precheck.hpp"

namespace ncgr1 {

std::string to_string(algorithm a) {
  switch (a) {
    case algorithm::classic: return "3fp";
    case algorithm::fourfold: return "4fp";
    case algorithm::heuristic: return "4fp-heuristic";
  }
  return "?";
}

algorithm parse_algorithm(const std::string& text) {
  if (text == "3fp") return algorithm::classic;
  if (text == "4fp") return algorithm::fourfold;
  if (text == "4fp-heuristic") return algorithm::heuristic;
  throw std::invalid_argument("unknown algorithm '" + text + "' (use 3fp, 4fp or 4fp-heuristic)");
}

solve_outcome solve_game(const game_graph& g, const gr1_spec& s, const solve_request& req) {
  solve_outcome out;
  out.spec = s;
  if (req.algo == algorithm::classic) {
    out.classic = solve_3fp(g, s, req.options);
    out.stats = out.classic->stats;
    out.realizable = out.classic->winning.contains(g.init());
    if (out.realizable) out.strategy = extract_strategy_classic(g, *out.classic);
    else out.message = "unrealizable from initial state";
    return out;
  }
  if (req.precheck) {
    out.failed_assumptions = check_inclusion(g, s);
    out.spec = augment_guarantees(s, out.failed_assumptions);
  }
  out.ranks = solve_4fp_vector(g, out.spec, req.algo == algorithm::heuristic, req.options);
  out.stats = out.ranks->stats;
  out.realizable = out.ranks->winning.contains(g.init());
  if (out.realizable) {
    out.strategy = extract_strategy_vector(g, *out.ranks);
  } else {
    out.message = "unrealizable from initial state";
    if (!out.failed_assumptions.empty()) out.message += " after guarantee augmentation";
  }
  return out;
}

}  // namespace ncgr1
