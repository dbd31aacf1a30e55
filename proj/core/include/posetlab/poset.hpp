#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posetlab {

using ElementId = std::size_t;
using CoverPair = std::pair<ElementId, ElementId>;

/// Sorted, duplicate-free set of element ids of one poset.
using Subset = std::vector<ElementId>;

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by rank-dependent queries on a poset that is not graded.
class NotGradedError : public PosetError {
 public:
  NotGradedError() : PosetError("poset is not graded") {}
};

/// Dense n x n boolean relation, one bit row per element.
class BitRelation {
 public:
  BitRelation() = default;
  explicit BitRelation(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void reset(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t i) {
    return {bits_.data() + i * words_, words_};
  }

  /// row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t row_count(std::size_t i) const;

  bool operator==(const BitRelation&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Immutable finite poset.
///
/// Elements are dense ids 0..n-1 with unique labels. The cover relation is
/// stored as the transitive reduction of the input pairs and the order is
/// kept as a reflexive closure matrix. When every maximal chain has the same
/// number of elements the poset is graded, with rank 0 on minimal elements.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from labels and cover pairs `(a, b)` meaning `b` covers
  /// `a`. Redundant (implied) pairs are dropped. Throws PosetError on a
  /// duplicate label, an unknown label, or a cycle.
  static Poset from_covers(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> cover_pairs);

  /// Same as from_covers, with pairs given as ids into `labels`.
  static Poset from_cover_ids(std::vector<std::string> labels,
                              std::span<const CoverPair> cover_pairs);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId x) const;
  std::optional<ElementId> find(std::string_view label) const;
  /// Like find, but throws PosetError for an unknown label.
  ElementId id_of(std::string_view label) const;

  /// x <= y. Throws PosetError for invalid ids.
  bool leq(ElementId x, ElementId y) const;
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const {
    return leq(x, y) || leq(y, x);
  }

  /// Elements covering x.
  std::span<const ElementId> upper_covers(ElementId x) const;
  /// Elements covered by x.
  std::span<const ElementId> lower_covers(ElementId x) const;
  /// All cover pairs (a, b), b covers a, sorted.
  std::vector<CoverPair> cover_pairs() const;
  std::size_t cover_count() const;

  const BitRelation& closure() const { return closure_; }

  bool is_minimal(ElementId x) const { return lower_covers(x).empty(); }
  bool is_maximal(ElementId x) const { return upper_covers(x).empty(); }

  bool is_graded() const { return graded_; }
  /// Rank of x; throws NotGradedError when the poset is not graded.
  int rank(ElementId x) const;
  /// Largest rank value N. A maximal chain has N + 1 elements. -1 for the
  /// empty poset.
  int max_rank() const;
  /// Level P_i; throws NotGradedError.
  Subset level(int i) const;

  /// Height of x: number of elements in a longest chain ending at x, minus 1.
  /// Defined for every poset.
  int height(ElementId x) const { return height_[check(x)]; }
  /// Number of elements in a longest chain of the poset.
  std::size_t longest_chain() const;

  /// A linear extension of the order (every element after all elements
  /// below it).
  const std::vector<ElementId>& linear_extension() const { return topo_; }

 private:
  ElementId check(ElementId x) const;
  void build(std::span<const CoverPair> pairs);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
  BitRelation closure_;
  std::vector<std::vector<ElementId>> up_;
  std::vector<std::vector<ElementId>> down_;
  std::vector<ElementId> topo_;
  std::vector<int> height_;
  bool graded_ = true;
  std::vector<int> rank_;
  int max_rank_ = -1;
};

/// Upper shadow: elements covering at least one member of A.
Subset nabla(const Poset& p, std::span<const ElementId> a);

/// Whitney numbers |P_0|, ..., |P_N| of a graded poset.
std::vector<std::size_t> whitney(const Poset& p);

/// Direct product; elements (p, q) are numbered p * |Q| + q and labelled
/// "(p,q)".
Poset product(const Poset& p, const Poset& q);

/// n-fold direct product; power(P, 0) is the one-element poset.
Poset power(const Poset& p, std::size_t n);

/// Transitive reduction of a reflexive, transitive relation, computed
/// straight from the closure. Used to audit stored covers.
std::vector<CoverPair> transitive_reduction(const BitRelation& closure);

}  // namespace posetlab
