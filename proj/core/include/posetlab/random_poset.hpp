#pragma once

#include <cstddef>
#include <random>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Random poset on n elements: each pair is related with probability
/// `density` in a random linear order, then closed transitively. Labels are
/// single letters for n <= 26.
Poset random_poset(std::size_t n, double density, std::mt19937_64& rng);

/// Random graded poset with between 1 and `max_size` elements: covers only
/// join consecutive levels, every non-bottom element covers something, and
/// every non-top element is covered by something.
Poset random_graded_poset(std::size_t max_size, std::mt19937_64& rng);

}  // namespace posetlab
