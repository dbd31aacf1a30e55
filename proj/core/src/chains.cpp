#include "posetlab/chains.hpp"

#include <algorithm>
#include <map>

namespace posetlab {
namespace {

bool single_char_labels(const Poset& p) {
  return std::all_of(p.labels().begin(), p.labels().end(),
                     [](const std::string& l) { return l.size() == 1; });
}

std::string chain_label(const Poset& p, const Multichain& c, bool compact) {
  std::string out;
  if (compact) {
    for (auto x : c) out += p.label(x);
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += "<=";
    out += p.label(c[i]);
  }
  return out + "]";
}

}  // namespace

bool is_multichain(const Poset& p, const Multichain& c) {
  for (auto x : c) {
    if (x >= p.size()) return false;
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!p.leq(c[i - 1], c[i])) return false;
  }
  return true;
}

MultichainCovers enumerate_multichains(const Poset& p, std::size_t k) {
  if (k == 0) throw PosetError("chain length k must be at least 1");
  MultichainCovers out;

  // Depth-first extension by any element above the last coordinate, trying
  // candidates in id order so the output is lexicographic.
  Multichain current;
  current.reserve(k);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == k) {
      out.chains.push_back(current);
      return;
    }
    for (ElementId y = 0; y < p.size(); ++y) {
      if (!current.empty() && !p.leq(current.back(), y)) continue;
      current.push_back(y);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);

  std::map<Multichain, ElementId> index;
  for (ElementId i = 0; i < out.chains.size(); ++i) {
    index.emplace(out.chains[i], i);
  }
  for (ElementId i = 0; i < out.chains.size(); ++i) {
    Multichain lower = out.chains[i];
    for (std::size_t j = 0; j < k; ++j) {
      const auto xj = lower[j];
      for (auto y : p.lower_covers(xj)) {
        if (j > 0 && !p.leq(lower[j - 1], y)) continue;
        lower[j] = y;
        out.covers.emplace_back(index.at(lower), i);
      }
      lower[j] = xj;
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  out.covers.erase(std::unique(out.covers.begin(), out.covers.end()),
                   out.covers.end());
  return out;
}

ChainPoset chain_poset(const Poset& p, std::size_t k) {
  auto mc = enumerate_multichains(p, k);
  const bool compact = single_char_labels(p);
  std::vector<std::string> labels;
  labels.reserve(mc.chains.size());
  for (const auto& c : mc.chains) labels.push_back(chain_label(p, c, compact));
  ChainPoset out;
  out.poset = Poset::from_cover_ids(std::move(labels), mc.covers);
  out.chains = std::move(mc.chains);
  out.k = k;
  return out;
}

int multichain_rank(const Poset& p, const Multichain& c) {
  if (!p.is_graded()) throw NotGradedError();
  if (!is_multichain(p, c)) throw PosetError("not a multichain of the poset");
  int total = 0;
  for (auto x : c) total += p.rank(x);
  return total;
}

std::string multichain_label(const Poset& p, const Multichain& c) {
  return chain_label(p, c, single_char_labels(p));
}

}  // namespace posetlab
