#include "posetlab/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace posetlab {
namespace {

std::vector<int> depths(const Poset& p) {
  std::vector<int> depth(p.size(), 0);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (auto b : p.upper_covers(*it)) {
      depth[*it] = std::max(depth[*it], depth[b] + 1);
    }
  }
  return depth;
}

// Colors both posets with one shared palette so that equal colors are
// comparable across P and Q.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Poset& p,
                                                            const Poset& q) {
  using Key = std::vector<long>;
  auto initial = [](const Poset& x) {
    std::vector<Key> keys(x.size());
    auto depth = depths(x);
    for (ElementId v = 0; v < x.size(); ++v) {
      std::size_t below = 0;
      for (ElementId u = 0; u < x.size(); ++u) below += x.leq(u, v) ? 1 : 0;
      keys[v] = {x.height(v),
                 depth[v],
                 static_cast<long>(x.upper_covers(v).size()),
                 static_cast<long>(x.lower_covers(v).size()),
                 static_cast<long>(below),
                 static_cast<long>(x.closure().row_count(v))};
    }
    return keys;
  };

  auto assign = [](const std::vector<Key>& kp, const std::vector<Key>& kq) {
    std::map<Key, int> palette;
    for (const auto& k : kp) palette.emplace(k, 0);
    for (const auto& k : kq) palette.emplace(k, 0);
    int next = 0;
    for (auto& [k, c] : palette) c = next++;
    std::vector<int> cp(kp.size()), cq(kq.size());
    for (std::size_t i = 0; i < kp.size(); ++i) cp[i] = palette[kp[i]];
    for (std::size_t i = 0; i < kq.size(); ++i) cq[i] = palette[kq[i]];
    return std::make_tuple(std::move(cp), std::move(cq), palette.size());
  };

  auto [cp, cq, classes] = assign(initial(p), initial(q));
  for (;;) {
    auto step = [](const Poset& x, const std::vector<int>& c) {
      std::vector<Key> keys(x.size());
      for (ElementId v = 0; v < x.size(); ++v) {
        Key up, down;
        for (auto b : x.upper_covers(v)) up.push_back(c[b]);
        for (auto b : x.lower_covers(v)) down.push_back(c[b]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        Key k{c[v], -1};
        k.insert(k.end(), up.begin(), up.end());
        k.push_back(-2);
        k.insert(k.end(), down.begin(), down.end());
        keys[v] = std::move(k);
      }
      return keys;
    };
    auto [np, nq, n_classes] = assign(step(p, cp), step(q, cq));
    cp = std::move(np);
    cq = std::move(nq);
    if (n_classes == classes) break;
    classes = n_classes;
  }
  return {std::move(cp), std::move(cq)};
}

class Matcher {
 public:
  Matcher(const Poset& p, const Poset& q, std::vector<int> cp,
          std::vector<int> cq)
      : p_(p), q_(q), cp_(std::move(cp)), cq_(std::move(cq)),
        map_(p.size(), kUnmapped), used_(q.size(), false) {
    plan();
  }

  std::optional<std::vector<ElementId>> run() {
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr ElementId kUnmapped = static_cast<ElementId>(-1);

  struct Step {
    ElementId element;
    ElementId anchor;  // kUnmapped when the element starts a new component
    bool anchor_below; // anchor is covered by element
  };

  // Breadth-first over the Hasse diagram, each component seeded by a member
  // of the rarest color class.
  void plan() {
    std::map<int, std::size_t> class_size;
    for (auto c : cp_) ++class_size[c];
    std::vector<ElementId> seeds(p_.size());
    for (ElementId v = 0; v < p_.size(); ++v) seeds[v] = v;
    std::stable_sort(seeds.begin(), seeds.end(), [&](ElementId a, ElementId b) {
      return class_size[cp_[a]] < class_size[cp_[b]];
    });
    std::vector<bool> seen(p_.size(), false);
    for (auto seed : seeds) {
      if (seen[seed]) continue;
      seen[seed] = true;
      std::deque<ElementId> queue{seed};
      steps_.push_back({seed, kUnmapped, false});
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : p_.upper_covers(v)) {
          if (!seen[w]) {
            seen[w] = true;
            steps_.push_back({w, v, true});
            queue.push_back(w);
          }
        }
        for (auto w : p_.lower_covers(v)) {
          if (!seen[w]) {
            seen[w] = true;
            steps_.push_back({w, v, false});
            queue.push_back(w);
          }
        }
      }
    }
  }

  bool consistent(std::size_t depth, ElementId x, ElementId y) const {
    for (std::size_t i = 0; i < depth; ++i) {
      auto u = steps_[i].element;
      auto fu = map_[u];
      if (p_.leq(u, x) != q_.leq(fu, y) || p_.leq(x, u) != q_.leq(y, fu)) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == steps_.size()) return true;
    const auto& step = steps_[depth];
    auto x = step.element;

    auto attempt = [&](ElementId y) {
      if (used_[y] || cq_[y] != cp_[x] || !consistent(depth, x, y)) return false;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      map_[x] = kUnmapped;
      used_[y] = false;
      return false;
    };

    if (step.anchor == kUnmapped) {
      for (ElementId y = 0; y < q_.size(); ++y) {
        if (attempt(y)) return true;
      }
      return false;
    }
    auto image = map_[step.anchor];
    auto candidates =
        step.anchor_below ? q_.upper_covers(image) : q_.lower_covers(image);
    for (auto y : candidates) {
      if (attempt(y)) return true;
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<int> cp_, cq_;
  std::vector<Step> steps_;
  std::vector<ElementId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const Poset& p,
                                                       const Poset& q) {
  if (p.size() != q.size() || p.cover_count() != q.cover_count()) {
    return std::nullopt;
  }
  auto [cp, cq] = refine_colors(p, q);
  auto hp = cp, hq = cq;
  std::sort(hp.begin(), hp.end());
  std::sort(hq.begin(), hq.end());
  if (hp != hq) return std::nullopt;
  return Matcher(p, q, std::move(cp), std::move(cq)).run();
}

bool is_order_isomorphism(const Poset& p, const Poset& q,
                          const std::vector<ElementId>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto y : map) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != q.leq(map[x], map[y])) return false;
    }
  }
  return true;
}

}  // namespace posetlab
