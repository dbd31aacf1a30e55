#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetlab/flow.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Level sizes |P_0|, ..., |P_N|.
using WhitneyProfile = std::vector<std::size_t>;

/// Rank indices (into the Whitney profile) where a sequence property fails,
/// with the counts found there:
///   symmetry       {i, N - i}      with counts[i] != counts[N - i]
///   unimodality    {a, b, c}, a<b<c with counts[a] > counts[b] < counts[c]
///   log-concavity  {i - 1, i, i+1} with counts[i]^2 < counts[i-1]*counts[i+1]
struct IndexWitness {
  std::vector<std::size_t> indices;
  std::vector<std::size_t> counts;
};

std::optional<IndexWitness> symmetry_violation(std::span<const std::size_t> counts);
std::optional<IndexWitness> unimodality_violation(std::span<const std::size_t> counts);
std::optional<IndexWitness> log_concavity_violation(std::span<const std::size_t> counts);

// The poset overloads throw NotGradedError for ungraded input.
std::optional<IndexWitness> symmetry_violation(const Poset& p);
std::optional<IndexWitness> unimodality_violation(const Poset& p);
std::optional<IndexWitness> log_concavity_violation(const Poset& p);

inline bool is_rank_symmetric(const Poset& p) { return !symmetry_violation(p); }
inline bool is_rank_unimodal(const Poset& p) { return !unimodality_violation(p); }
inline bool is_rank_log_concave(const Poset& p) {
  return !log_concavity_violation(p);
}

/// A ⊆ P_level with |A| * |P_{level+1}| > |∇(A)| * |P_level|.
struct NormalityWitness {
  int level = 0;
  Subset subset;
  Subset shadow;
  std::size_t level_size = 0;
  std::size_t next_level_size = 0;
};

/// Checks the normalized matching condition on every pair of consecutive
/// levels with one max-flow each: source -> a (capacity |P_{i+1}|), a -> b
/// for each cover (capacity |P_i||P_{i+1}| + 1), b -> sink (capacity |P_i|).
/// The pair passes iff the flow saturates at |P_i||P_{i+1}|; otherwise the
/// source side of a minimum cut is a violating subset.
std::optional<NormalityWitness> normality_violation(const Poset& p);
inline bool is_normal(const Poset& p) { return !normality_violation(p); }

/// Same condition by enumerating every subset of every level. Throws
/// PosetError when a level has more than 20 elements.
bool is_normal_exhaustive(const Poset& p);

/// A union of j antichains, listed as j disjoint antichains (some may be
/// empty).
struct JFamily {
  std::size_t size = 0;
  std::vector<Subset> antichains;
};

/// d_j(P), the largest union of j antichains, with a family attaining it.
///
/// Computed from the dual problem: the minimum over chain partitions of
/// Σ min(|C|, j), realized as a min-cost flow in which every chain is a
/// source-to-sink path charged j that earns -1 for each element it
/// collects. Optimal node potentials then single out a largest subset
/// without a (j+1)-element chain. Throws PosetError for j = 0.
JFamily max_j_family(const Poset& p, std::size_t j);

/// d_j by enumerating all subsets. Throws PosetError for j = 0 or
/// |P| > 16.
std::size_t max_j_family_bruteforce(const Poset& p, std::size_t j);

/// j, a family of j antichains larger than the j largest levels together.
struct SpernerWitness {
  std::size_t j = 0;
  JFamily family;
  std::size_t level_bound = 0;
};

/// Tests d_j(P) against the sum of the j largest Whitney numbers for
/// j = 1 .. N + 1.
std::optional<SpernerWitness> sperner_violation(const Poset& p);
inline bool is_strongly_sperner(const Poset& p) { return !sperner_violation(p); }

/// Sum of the j largest entries of the profile.
std::size_t top_levels_sum(std::span<const std::size_t> counts, std::size_t j);

using Polynomial = std::vector<std::int64_t>;

/// Coefficients of Σ_i |P_i| q^i.
Polynomial rank_polynomial(const Poset& p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial power(const Polynomial& a, std::size_t n);
/// "1 + 2q + 3q^2"
std::string format_polynomial(const Polynomial& a);
/// "(2,3,6,4,2)"
std::string format_profile(std::span<const std::size_t> counts);

// Witness re-validation against the poset.
bool validates(const Poset& p, const NormalityWitness& w);
bool validates(const Poset& p, const JFamily& family);
bool validates(const Poset& p, const SpernerWitness& w);
bool is_antichain(const Poset& p, std::span<const ElementId> set);

}  // namespace posetlab
