#pragma once

#include <optional>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Finds an order isomorphism P -> Q, returned as the image of each element
/// of P. Elements are first split into classes by iterated refinement of
/// (height, depth, degrees, up/down-set sizes); the search then extends a
/// partial map along Hasse edges and backtracks on conflicts.
std::optional<std::vector<ElementId>> find_isomorphism(const Poset& p,
                                                       const Poset& q);

inline bool is_isomorphic(const Poset& p, const Poset& q) {
  return find_isomorphism(p, q).has_value();
}

/// True iff `map` is a bijection P -> Q with x <= y <=> map[x] <= map[y].
bool is_order_isomorphism(const Poset& p, const Poset& q,
                          const std::vector<ElementId>& map);

}  // namespace posetlab
