#include "posetlab/catalog.hpp"

#include <utility>
#include <vector>

namespace posetlab {
namespace {

std::string mark(std::size_t index, std::size_t mark_class) {
  static const char* const primes[] = {"", "′", "″", "‴"};
  auto base = std::to_string(index);
  if (mark_class < 4) return base + primes[mark_class];
  return base + "^(" + std::to_string(mark_class) + ")";
}

}  // namespace

Poset total(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i <= k; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset::from_cover_ids(std::move(labels), covers);
}

Poset boolean(std::size_t n) { return isotropic_general(n, 1); }

Poset isotropic(std::size_t n) { return isotropic_general(n, 2); }

Poset isotropic_general(std::size_t n, std::size_t m) {
  if (m == 0) throw PosetError("isotropic family needs at least one mark class");

  // Element = word over {0..m} of length n: 0 leaves index i out, c > 0 puts
  // in index i with mark class c - 1. Ids are the mixed-radix values.
  const std::size_t radix = m + 1;
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= radix;

  std::vector<std::string> labels(count);
  std::vector<CoverPair> covers;
  std::vector<std::size_t> word(n, 0);
  for (std::size_t id = 0; id < count; ++id) {
    std::size_t rest = id;
    for (std::size_t i = 0; i < n; ++i) {
      word[i] = rest % radix;
      rest /= radix;
    }
    std::string label;
    for (std::size_t c = 1; c <= m; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        if (word[i] != c) continue;
        label += label.empty() ? "{" : ",";
        label += mark(i + 1, c - 1);
      }
    }
    labels[id] = label.empty() ? "∅" : label + "}";

    std::size_t place = 1;
    for (std::size_t i = 0; i < n; ++i, place *= radix) {
      if (word[i] != 0) continue;
      for (std::size_t c = 1; c <= m; ++c) covers.emplace_back(id, id + c * place);
    }
  }
  return Poset::from_cover_ids(std::move(labels), covers);
}

Poset example_sym() {
  std::vector<std::pair<std::string, std::string>> covers{
      {"C", "A"}, {"D", "A"}, {"D", "B"}, {"E", "B"},
      {"F", "C"}, {"F", "D"}, {"G", "E"}};
  return Poset::from_covers({"A", "B", "C", "D", "E", "F", "G"}, covers);
}

Poset example_uni() {
  std::vector<std::pair<std::string, std::string>> covers{
      {"B", "A"}, {"C", "A"}, {"D", "B"}, {"E", "C"}, {"F", "D"}, {"F", "E"}};
  return Poset::from_covers({"A", "B", "C", "D", "E", "F"}, covers);
}

Poset make(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::total: return total(spec.n);
    case Family::boolean: return boolean(spec.n);
    case Family::isotropic: return isotropic(spec.n);
    case Family::isotropic_general: return isotropic_general(spec.n, spec.m);
    case Family::example_sym: return example_sym();
    case Family::example_uni: return example_uni();
  }
  throw PosetError("unknown family");
}

std::string describe(const FamilySpec& spec) {
  auto n = std::to_string(spec.n);
  switch (spec.family) {
    case Family::total: return "T(" + n + ")";
    case Family::boolean: return "B(" + n + ")";
    case Family::isotropic: return "I(" + n + ")";
    case Family::isotropic_general:
      return "I(" + n + "," + std::to_string(spec.m) + ")";
    case Family::example_sym: return "ex1";
    case Family::example_uni: return "ex2";
  }
  return "?";
}

}  // namespace posetlab
