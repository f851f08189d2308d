#pragma once

#include <string>

#include "snalab/lattice.hpp"

namespace snalab {

// Hasse diagram in DOT: one node per element labeled by its name, one edge
// per cover drawn upward, bottom at the lowest rank.
std::string to_dot(const FiniteLattice& l, const std::string& graph_name = "hasse");

}  // namespace snalab
