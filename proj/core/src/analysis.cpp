#include "posetlab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace posetlab {

std::optional<IndexWitness> symmetry_violation(std::span<const std::size_t> counts) {
  const std::size_t n = counts.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (counts[i] != counts[n - 1 - i]) {
      return IndexWitness{{i, n - 1 - i}, {counts[i], counts[n - 1 - i]}};
    }
  }
  return std::nullopt;
}

std::optional<IndexWitness> unimodality_violation(std::span<const std::size_t> counts) {
  const std::size_t n = counts.size();
  // First strict descent, then the first strict ascent after it.
  std::size_t d = 0;
  while (d + 1 < n && counts[d] <= counts[d + 1]) ++d;
  for (std::size_t m = d + 1; m + 1 < n; ++m) {
    if (counts[m] < counts[m + 1]) {
      return IndexWitness{{d, m, m + 1}, {counts[d], counts[m], counts[m + 1]}};
    }
  }
  return std::nullopt;
}

std::optional<IndexWitness> log_concavity_violation(
    std::span<const std::size_t> counts) {
  for (std::size_t i = 1; i + 1 < counts.size(); ++i) {
    // Level sizes stay far below 2^32, so the products fit in 64 bits.
    if (counts[i] * counts[i] < counts[i - 1] * counts[i + 1]) {
      return IndexWitness{{i - 1, i, i + 1},
                          {counts[i - 1], counts[i], counts[i + 1]}};
    }
  }
  return std::nullopt;
}

std::optional<IndexWitness> symmetry_violation(const Poset& p) {
  return symmetry_violation(whitney(p));
}
std::optional<IndexWitness> unimodality_violation(const Poset& p) {
  return unimodality_violation(whitney(p));
}
std::optional<IndexWitness> log_concavity_violation(const Poset& p) {
  return log_concavity_violation(whitney(p));
}

std::optional<NormalityWitness> normality_violation(const Poset& p) {
  if (!p.is_graded()) throw NotGradedError();
  const int top = p.max_rank();
  std::vector<Subset> levels;
  for (int i = 0; i <= top; ++i) levels.push_back(p.level(i));

  for (int i = 0; i < top; ++i) {
    const auto& lower = levels[static_cast<std::size_t>(i)];
    const auto& upper = levels[static_cast<std::size_t>(i + 1)];
    const auto lo = static_cast<Capacity>(lower.size());
    const auto hi = static_cast<Capacity>(upper.size());

    std::vector<std::size_t> slot(p.size(), 0);
    for (std::size_t a = 0; a < lower.size(); ++a) slot[lower[a]] = 2 + a;
    for (std::size_t b = 0; b < upper.size(); ++b) {
      slot[upper[b]] = 2 + lower.size() + b;
    }
    FlowNetwork net(2 + lower.size() + upper.size(), 0, 1);
    for (auto a : lower) {
      net.add_arc(0, slot[a], hi);
      for (auto b : p.upper_covers(a)) net.add_arc(slot[a], slot[b], lo * hi + 1);
    }
    for (auto b : upper) net.add_arc(slot[b], 1, lo);

    auto flow = max_flow(net);
    if (flow.value == lo * hi) continue;

    NormalityWitness w;
    w.level = i;
    w.level_size = lower.size();
    w.next_level_size = upper.size();
    for (auto a : lower) {
      if (flow.source_side[slot[a]]) w.subset.push_back(a);
    }
    w.shadow = nabla(p, w.subset);
    return w;
  }
  return std::nullopt;
}

bool is_normal_exhaustive(const Poset& p) {
  if (!p.is_graded()) throw NotGradedError();
  const int top = p.max_rank();
  for (int i = 0; i < top; ++i) {
    auto lower = p.level(i);
    auto upper = p.level(i + 1);
    if (lower.size() > 20 || upper.size() > 64) {
      throw PosetError("level too large for exhaustive normality check");
    }
    std::vector<std::uint64_t> up_mask(lower.size(), 0);
    for (std::size_t a = 0; a < lower.size(); ++a) {
      for (auto b : p.upper_covers(lower[a])) {
        auto pos = std::lower_bound(upper.begin(), upper.end(), b) - upper.begin();
        up_mask[a] |= std::uint64_t{1} << pos;
      }
    }
    const std::uint64_t subsets = std::uint64_t{1} << lower.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::uint64_t shadow = 0;
      for (std::size_t a = 0; a < lower.size(); ++a) {
        if ((mask >> a) & 1U) shadow |= up_mask[a];
      }
      const auto size_a = static_cast<std::uint64_t>(std::popcount(mask));
      const auto size_shadow = static_cast<std::uint64_t>(std::popcount(shadow));
      if (size_a * upper.size() > size_shadow * lower.size()) return false;
    }
  }
  return true;
}

namespace {

// Splits a set with no long chains into antichains by height inside the set.
std::vector<Subset> split_by_height(const Poset& p, const std::vector<bool>& in,
                                    std::size_t count) {
  std::vector<std::size_t> h(p.size(), 0);
  std::vector<Subset> out(count);
  for (auto v : p.linear_extension()) {
    if (!in[v]) continue;
    std::size_t best = 0;
    for (ElementId u = 0; u < p.size(); ++u) {
      if (in[u] && u != v && p.leq(u, v)) best = std::max(best, h[u]);
    }
    h[v] = best + 1;
    if (h[v] > count) throw std::logic_error("family has a chain longer than j");
    out[h[v] - 1].push_back(v);
  }
  for (auto& a : out) std::sort(a.begin(), a.end());
  return out;
}

}  // namespace

JFamily max_j_family(const Poset& p, std::size_t j) {
  if (j == 0) throw PosetError("j must be at least 1");
  const std::size_t n = p.size();
  if (j >= p.longest_chain()) {
    return {n, split_by_height(p, std::vector<bool>(n, true), j)};
  }

  auto in = [](ElementId v) { return 2 + 2 * v; };
  auto out = [](ElementId v) { return 3 + 2 * v; };
  const auto wide = static_cast<Capacity>(n + 1);
  const auto charge = static_cast<Cost>(j);

  FlowNetwork net(2 + 2 * n, 0, 1);
  for (ElementId v = 0; v < n; ++v) {
    net.add_arc(0, in(v), 1, charge);
    net.add_arc(in(v), out(v), 1, -1);
    net.add_arc(in(v), out(v), wide, 0);  // pass through without collecting
    net.add_arc(out(v), 1, 1, 0);
    for (auto w : p.upper_covers(v)) net.add_arc(out(v), in(w), wide, 0);
  }
  auto best = min_cost_flow_best(net);
  const auto d_j = static_cast<std::size_t>(static_cast<Cost>(n) + best.cost);

  // v belongs to the family iff the three unit arcs at v all have zero
  // complementary-slackness penalty under optimal potentials.
  auto pot = residual_potentials(net, best.flow, true);
  std::vector<bool> member(n, false);
  std::size_t members = 0;
  for (ElementId v = 0; v < n; ++v) {
    const Cost s = pot[0], t = pot[1], a = pot[in(v)], b = pot[out(v)];
    if (a - s <= charge && b <= a - 1 && t <= b) {
      member[v] = true;
      ++members;
    }
  }
  if (members != d_j) {
    throw std::logic_error("k-family extraction disagrees with flow value");
  }
  return {d_j, split_by_height(p, member, j)};
}

std::size_t max_j_family_bruteforce(const Poset& p, std::size_t j) {
  if (j == 0) throw PosetError("j must be at least 1");
  const std::size_t n = p.size();
  if (n > 16) throw PosetError("poset too large for brute-force k-family");

  std::vector<std::uint32_t> below(n, 0);
  for (ElementId v = 0; v < n; ++v) {
    for (ElementId u = 0; u < n; ++u) {
      if (u != v && p.leq(u, v)) below[v] |= std::uint32_t{1} << u;
    }
  }
  const auto& order = p.linear_extension();
  std::size_t best = 0;
  std::vector<std::size_t> h(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::size_t longest = 0;
    for (auto v : order) {
      if (!((mask >> v) & 1U)) continue;
      std::size_t hv = 1;
      for (std::uint32_t rest = below[v] & mask; rest != 0; rest &= rest - 1) {
        hv = std::max(hv, h[static_cast<std::size_t>(std::countr_zero(rest))] + 1);
      }
      h[v] = hv;
      longest = std::max(longest, hv);
      if (longest > j) break;
    }
    if (longest <= j) best = size;
  }
  return best;
}

std::size_t top_levels_sum(std::span<const std::size_t> counts, std::size_t j) {
  std::vector<std::size_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t total = 0;
  for (std::size_t i = 0; i < std::min(j, sorted.size()); ++i) total += sorted[i];
  return total;
}

std::optional<SpernerWitness> sperner_violation(const Poset& p) {
  const auto counts = whitney(p);
  for (std::size_t j = 1; j <= counts.size(); ++j) {
    auto family = max_j_family(p, j);
    const auto bound = top_levels_sum(counts, j);
    if (family.size > bound) return SpernerWitness{j, std::move(family), bound};
  }
  return std::nullopt;
}

Polynomial rank_polynomial(const Poset& p) {
  auto counts = whitney(p);
  return Polynomial(counts.begin(), counts.end());
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

Polynomial power(const Polynomial& a, std::size_t n) {
  Polynomial out{1};
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

std::string format_polynomial(const Polynomial& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i] != 1 || i == 0) os << a[i];
    if (i >= 1) os << 'q';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

std::string format_profile(std::span<const std::size_t> counts) {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

bool is_antichain(const Poset& p, std::span<const ElementId> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t k = i + 1; k < set.size(); ++k) {
      if (p.comparable(set[i], set[k])) return false;
    }
  }
  return true;
}

bool validates(const Poset& p, const NormalityWitness& w) {
  if (!p.is_graded() || w.level < 0 || w.level >= p.max_rank()) return false;
  const auto lower = p.level(w.level);
  const auto upper = p.level(w.level + 1);
  if (w.subset.empty() || lower.size() != w.level_size ||
      upper.size() != w.next_level_size) {
    return false;
  }
  for (auto a : w.subset) {
    if (!std::binary_search(lower.begin(), lower.end(), a)) return false;
  }
  const auto shadow = nabla(p, w.subset);
  if (shadow != w.shadow) return false;
  return w.subset.size() * upper.size() > shadow.size() * lower.size();
}

bool validates(const Poset& p, const JFamily& family) {
  std::vector<bool> seen(p.size(), false);
  std::size_t total = 0;
  for (const auto& a : family.antichains) {
    for (auto v : a) {
      if (v >= p.size() || seen[v]) return false;
      seen[v] = true;
    }
    if (!is_antichain(p, a)) return false;
    total += a.size();
  }
  return total == family.size;
}

bool validates(const Poset& p, const SpernerWitness& w) {
  if (!p.is_graded() || w.family.antichains.size() != w.j) return false;
  return validates(p, w.family) &&
         w.level_bound == top_levels_sum(whitney(p), w.j) &&
         w.family.size > w.level_bound;
}

}  // namespace posetlab
