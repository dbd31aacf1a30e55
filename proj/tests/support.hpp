#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab::testing {

// Every bijection P -> Q checked by brute force.
inline bool isomorphic_by_permutations(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<ElementId> perm(q.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (ElementId x = 0; x < p.size() && ok; ++x) {
      for (ElementId y = 0; y < p.size() && ok; ++y) {
        ok = p.leq(x, y) == q.leq(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Largest union of j antichains, via all subsets and pairwise comparisons
// only (no DP over a linear extension).
inline std::size_t j_family_by_subsets(const Poset& p, std::size_t j) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // longest chain inside mask: relax repeatedly
    std::vector<std::size_t> len(n, 1);
    for (std::size_t round = 0; round < n; ++round) {
      for (ElementId u = 0; u < n; ++u) {
        for (ElementId v = 0; v < n; ++v) {
          if (((mask >> u) & 1u) && ((mask >> v) & 1u) && p.less(u, v)) {
            len[v] = std::max(len[v], len[u] + 1);
          }
        }
      }
    }
    std::size_t longest = 0;
    for (ElementId v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) longest = std::max(longest, len[v]);
    }
    if (longest <= j) {
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
  }
  return best;
}

}  // namespace posetlab::testing
