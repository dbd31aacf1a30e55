#pragma once

#include <string>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Hasse diagram in Graphviz DOT, drawn bottom-up with one rank=same
/// subgraph per level (per height when the poset is not graded). Node names
/// are the labels with primes written as apostrophes; every node is declared
/// exactly once and every cover is one edge. Output depends only on the
/// poset, so it is stable for a fixed expression.
std::string to_dot(const Poset& p, const std::string& title = "poset");

}  // namespace posetlab
