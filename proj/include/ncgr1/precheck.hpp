#pragma once

#include <vector>

#include "ncgr1/game.hpp"

namespace ncgr1 {

/// Indices b (zero based) for which some play from the initial state avoids
/// F_A^b forever while visiting every F_G^a infinitely often.
std::vector<std::size_t> check_inclusion(const game_graph& g, const gr1_spec& s);

/// Appends F_A^b for every failed b to the guarantees, skipping sets already
/// present.
gr1_spec augment_guarantees(const gr1_spec& s, const std::vector<std::size_t>& failed);

}  // namespace ncgr1
