#include "posetlab/random_poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace posetlab {
namespace {

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                             : "x" + std::to_string(i));
  }
  return labels;
}

}  // namespace

Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution related(density);
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (related(rng)) pairs.emplace_back(order[i], order[k]);
    }
  }
  return Poset::from_cover_ids(letter_labels(n), pairs);
}

Poset random_graded_poset(std::size_t max_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> total_dist(1, std::max<std::size_t>(1, max_size));
  const std::size_t total = total_dist(rng);
  std::uniform_int_distribution<std::size_t> level_dist(1, std::min<std::size_t>(total, 5));
  const std::size_t level_count = level_dist(rng);

  // Split `total` into level_count positive parts.
  std::vector<std::size_t> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(level_count - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<ElementId>> levels;
  std::size_t prev = 0;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const std::size_t end = i < cuts.size() ? cuts[i] : total;
    std::vector<ElementId> level(end - prev);
    std::iota(level.begin(), level.end(), prev);
    levels.push_back(std::move(level));
    prev = end;
  }

  std::bernoulli_distribution coin(0.4);
  std::vector<CoverPair> pairs;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto& lower = levels[i - 1];
    const auto& upper = levels[i];
    std::vector<bool> covered(lower.size(), false);
    for (auto b : upper) {
      bool any = false;
      for (std::size_t a = 0; a < lower.size(); ++a) {
        if (coin(rng)) {
          pairs.emplace_back(lower[a], b);
          covered[a] = any = true;
        }
      }
      if (!any) {
        std::uniform_int_distribution<std::size_t> pick(0, lower.size() - 1);
        const auto a = pick(rng);
        pairs.emplace_back(lower[a], b);
        covered[a] = true;
      }
    }
    for (std::size_t a = 0; a < lower.size(); ++a) {
      if (covered[a]) continue;
      std::uniform_int_distribution<std::size_t> pick(0, upper.size() - 1);
      pairs.emplace_back(lower[a], upper[pick(rng)]);
    }
  }

  // Shuffle ids so graded structure is not tied to id order.
  std::vector<ElementId> perm(total);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : pairs) {
    a = perm[a];
    b = perm[b];
  }
  return Poset::from_cover_ids(letter_labels(total), pairs);
}

}  // namespace posetlab
