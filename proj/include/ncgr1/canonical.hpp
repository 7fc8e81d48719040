#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncgr1/game_io.hpp"

namespace ncgr1 {

/// Builds a game from names. Owners: 0 environment, 1 system.
game_file make_game(const std::vector<std::pair<std::string, int>>& states,
                    const std::vector<std::pair<std::string, std::string>>& edges, const std::string& init,
                    const std::vector<std::vector<std::string>>& assumptions,
                    const std::vector<std::vector<std::string>>& guarantees);

namespace canonical {

/// a (env, init) <-> b (sys); F_A = {a}, F_G = {b}.
game_file ex0();
/// a0, a1 env; b0, b1 sys; F_A = {a1}, F_G = {b0}.
game_file ex1();
/// Ten states; q8 and q9 form a trap that only the classic solution wins.
game_file trap_pair();
/// Eleven states, two assumptions and two guarantees. The environment can
/// drop the assumption mode from 2 to 1 by moving q2 -> q6.
game_file two_by_two();
/// Single lasso q0 q1 (q2 q3)^w; the assumption state q5 is never reached.
game_file conflicting_loop();
/// Same as conflicting_loop with an extra environment edge q2 -> q5.
game_file nonconflicting_loop();

}  // namespace canonical
}  // namespace ncgr1
