#pragma once

#include <cstddef>
#include <string>

#include "posetlab/poset.hpp"

namespace posetlab {

enum class Family {
  total,
  boolean,
  isotropic,
  isotropic_general,
  example_sym,
  example_uni,
};

/// A named poset family with its parameters. `m` (mark classes) is only
/// read for isotropic_general.
struct FamilySpec {
  Family family = Family::total;
  std::size_t n = 0;
  std::size_t m = 1;

  bool operator==(const FamilySpec&) const = default;
};

/// The total order 0 < 1 < ... < k.
Poset total(std::size_t k);
/// Subsets of {1..n} under inclusion, labelled like "{1,3}" and "∅".
Poset boolean(std::size_t n);
/// Subsets of {1..n} ⊔ {1′..n′} containing no pair {i, i′}.
Poset isotropic(std::size_t n);
/// Subsets of m marked copies of {1..n} using each index at most once.
/// Mark classes print as 1, 1′, 1″, 1‴, then 1^(4), 1^(5), ...
/// Throws PosetError for m = 0.
Poset isotropic_general(std::size_t n, std::size_t m);
/// Rank-symmetric poset on A..G whose 2-chain poset is not rank-symmetric.
Poset example_sym();
/// Rank-unimodal poset on A..F whose 2-chain poset is not rank-unimodal.
Poset example_uni();

Poset make(const FamilySpec& spec);

/// Short name in expression syntax, e.g. "B(3)" or "I(2,3)".
std::string describe(const FamilySpec& spec);

}  // namespace posetlab
