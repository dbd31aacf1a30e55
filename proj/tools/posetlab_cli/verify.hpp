#pragma once

#include <functional>
#include <string>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The fixed, ordered list of checks behind `posetlab verify-paper`.
/// Randomized checks use fixed seeds, so results are reproducible.
const std::vector<Criterion>& acceptance_suite();

/// Runs every criterion in order. Criterion 9 also checks that 1-8 passed.
std::vector<CriterionResult> run_acceptance_suite();

/// Covers of P[k] computed straight from the coordinatewise order: all
/// multichains by brute force over k-tuples, comparability by comparing
/// every coordinate, then the transitive reduction. Indices follow the
/// lexicographic order of the tuples, matching enumerate_multichains.
std::vector<CoverPair> chain_covers_by_definition(const Poset& p, std::size_t k);

}  // namespace posetlab::cli
