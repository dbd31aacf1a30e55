#include "posetlab/poset.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace posetlab {

std::size_t BitRelation::row_count(std::size_t i) const {
  std::size_t count = 0;
  for (auto w : row(i)) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

Poset Poset::from_covers(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> cover_pairs) {
  std::unordered_map<std::string, ElementId> index;
  for (ElementId i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw PosetError("duplicate label '" + labels[i] + "'");
    }
  }
  std::vector<CoverPair> ids;
  ids.reserve(cover_pairs.size());
  for (const auto& [a, b] : cover_pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw PosetError("unknown label '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw PosetError("unknown label '" + b + "'");
    ids.emplace_back(ia->second, ib->second);
  }
  return from_cover_ids(std::move(labels), ids);
}

Poset Poset::from_cover_ids(std::vector<std::string> labels,
                            std::span<const CoverPair> cover_pairs) {
  Poset p;
  p.labels_ = std::move(labels);
  for (ElementId i = 0; i < p.labels_.size(); ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second) {
      throw PosetError("duplicate label '" + p.labels_[i] + "'");
    }
  }
  for (const auto& [a, b] : cover_pairs) {
    if (a >= p.size() || b >= p.size()) {
      throw PosetError("cover pair references an invalid element id");
    }
  }
  p.build(cover_pairs);
  return p;
}

void Poset::build(std::span<const CoverPair> pairs) {
  const std::size_t n = size();

  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw PosetError("cycle detected: '" + labels_[a] + "' covers itself");
    }
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto b : s) ++indegree[b];
  }

  // Kahn's algorithm; the smallest available id goes first so the linear
  // extension is deterministic.
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  topo_.clear();
  topo_.reserve(n);
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (auto w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (topo_.size() != n) {
    for (ElementId v = 0; v < n; ++v) {
      if (indegree[v] != 0) {
        throw PosetError("cycle detected through '" + labels_[v] + "'");
      }
    }
  }

  closure_ = BitRelation(n);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    auto v = *it;
    closure_.set(v, v);
    for (auto w : succ[v]) closure_.merge_row(v, w);
  }

  // An input successor b of a is a cover unless another input successor of a
  // lies below b.
  up_.assign(n, {});
  down_.assign(n, {});
  for (ElementId a = 0; a < n; ++a) {
    for (auto b : succ[a]) {
      bool implied = false;
      for (auto t : succ[a]) {
        if (t != b && closure_.test(t, b)) {
          implied = true;
          break;
        }
      }
      if (!implied) {
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
  for (auto& d : down_) std::sort(d.begin(), d.end());

  // Longest and shortest saturated chains from the minimal elements. The
  // poset is graded iff the two agree everywhere and all maximal elements
  // sit at the same height.
  height_.assign(n, 0);
  std::vector<int> shortest(n, 0);
  for (auto v : topo_) {
    if (down_[v].empty()) continue;
    int hi = 0;
    int lo = static_cast<int>(n);
    for (auto u : down_[v]) {
      hi = std::max(hi, height_[u] + 1);
      lo = std::min(lo, shortest[u] + 1);
    }
    height_[v] = hi;
    shortest[v] = lo;
  }
  graded_ = true;
  int top = -1;
  for (ElementId v = 0; v < n && graded_; ++v) {
    if (height_[v] != shortest[v]) graded_ = false;
    if (up_[v].empty()) {
      if (top == -1) {
        top = height_[v];
      } else if (top != height_[v]) {
        graded_ = false;
      }
    }
  }
  if (graded_) {
    rank_ = height_;
    max_rank_ = top;
  } else {
    rank_.clear();
    max_rank_ = -1;
  }
}

ElementId Poset::check(ElementId x) const {
  if (x >= size()) {
    throw PosetError("invalid element id " + std::to_string(x));
  }
  return x;
}

const std::string& Poset::label(ElementId x) const { return labels_[check(x)]; }

std::optional<ElementId> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw PosetError("unknown label '" + std::string(label) + "'");
}

bool Poset::leq(ElementId x, ElementId y) const {
  return closure_.test(check(x), check(y));
}

std::span<const ElementId> Poset::upper_covers(ElementId x) const {
  return up_[check(x)];
}

std::span<const ElementId> Poset::lower_covers(ElementId x) const {
  return down_[check(x)];
}

std::vector<CoverPair> Poset::cover_pairs() const {
  std::vector<CoverPair> out;
  out.reserve(cover_count());
  for (ElementId a = 0; a < size(); ++a) {
    for (auto b : up_[a]) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t count = 0;
  for (const auto& u : up_) count += u.size();
  return count;
}

int Poset::rank(ElementId x) const {
  check(x);
  if (!graded_) throw NotGradedError();
  return rank_[x];
}

int Poset::max_rank() const {
  if (!graded_) throw NotGradedError();
  return max_rank_;
}

Subset Poset::level(int i) const {
  if (!graded_) throw NotGradedError();
  Subset out;
  for (ElementId v = 0; v < size(); ++v) {
    if (rank_[v] == i) out.push_back(v);
  }
  return out;
}

std::size_t Poset::longest_chain() const {
  if (empty()) return 0;
  return static_cast<std::size_t>(
             *std::max_element(height_.begin(), height_.end())) +
         1;
}

Subset nabla(const Poset& p, std::span<const ElementId> a) {
  Subset out;
  for (auto x : a) {
    for (auto b : p.upper_covers(x)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> whitney(const Poset& p) {
  if (!p.is_graded()) throw NotGradedError();
  std::vector<std::size_t> counts(
      static_cast<std::size_t>(p.max_rank() + 1), 0);
  for (ElementId x = 0; x < p.size(); ++x) {
    ++counts[static_cast<std::size_t>(p.rank(x))];
  }
  return counts;
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < m; ++b) {
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    }
  }
  // (a,b) is covered in the product exactly when one coordinate steps up a
  // cover and the other stays fixed.
  std::vector<CoverPair> covers;
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < m; ++b) {
      for (auto a2 : p.upper_covers(a)) covers.emplace_back(a * m + b, a2 * m + b);
      for (auto b2 : q.upper_covers(b)) covers.emplace_back(a * m + b, a * m + b2);
    }
  }
  return Poset::from_cover_ids(std::move(labels), covers);
}

Poset power(const Poset& p, std::size_t n) {
  if (n == 0) return Poset::from_cover_ids({"()"}, {});
  Poset out = p;
  for (std::size_t i = 1; i < n; ++i) out = product(out, p);
  return out;
}

std::vector<CoverPair> transitive_reduction(const BitRelation& closure) {
  const std::size_t n = closure.size();
  std::vector<CoverPair> out;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (a == b || !closure.test(a, b)) continue;
      bool between = false;
      for (ElementId z = 0; z < n && !between; ++z) {
        between = z != a && z != b && closure.test(a, z) && closure.test(z, b);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace posetlab
