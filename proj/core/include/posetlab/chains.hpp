#pragma once

#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// A k-multichain x_1 <= x_2 <= ... <= x_k of base-poset element ids.
using Multichain = std::vector<ElementId>;

/// The poset of k-multichains of a base poset, with the back-map from each
/// element to its multichain.
struct ChainPoset {
  Poset poset;
  std::vector<Multichain> chains;
  std::size_t k = 0;
};

/// All k-multichains of P in lexicographic order of id tuples, together
/// with the covers given by the one-coordinate rule: y is covered by x iff
/// they agree everywhere except at one position j where y_j is covered by
/// x_j. Covers are returned as (lower index, upper index) into `chains`.
struct MultichainCovers {
  std::vector<Multichain> chains;
  std::vector<CoverPair> covers;
};
MultichainCovers enumerate_multichains(const Poset& p, std::size_t k);

/// P[k]. Element labels concatenate the base labels ("CA" for C <= A) when
/// every base label is a single character, and read "[x1<=x2<=...]"
/// otherwise. Throws PosetError for k = 0.
ChainPoset chain_poset(const Poset& p, std::size_t k);

/// Sum of base ranks. Throws NotGradedError when P is not graded and
/// PosetError when `c` is not a multichain of P.
int multichain_rank(const Poset& p, const Multichain& c);

bool is_multichain(const Poset& p, const Multichain& c);

/// Label of a multichain in the style used by chain_poset.
std::string multichain_label(const Poset& p, const Multichain& c);

}  // namespace posetlab
