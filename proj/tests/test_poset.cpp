#include <doctest.h>

#include <filesystem>
#include <random>

#include "posetlab/catalog.hpp"
#include "posetlab/chains.hpp"
#include "posetlab/isomorphism.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/poset_io.hpp"
#include "posetlab/random_poset.hpp"
#include "support.hpp"

using namespace posetlab;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Poset from(std::vector<std::string> labels, Pairs covers) {
  return Poset::from_covers(std::move(labels), covers);
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

}  // namespace

TEST_CASE("from_covers builds the first counterexample") {
  auto p = from({"A", "B", "C", "D", "E", "F", "G"},
                {{"C", "A"}, {"D", "A"}, {"D", "B"}, {"E", "B"},
                 {"F", "C"}, {"F", "D"}, {"G", "E"}});
  CHECK(p.size() == 7);
  CHECK(p.is_graded());
  CHECK(whitney(p) == std::vector<std::size_t>{2, 3, 2});
  CHECK(p.leq(p.id_of("F"), p.id_of("A")));
  CHECK_FALSE(p.leq(p.id_of("C"), p.id_of("B")));
  for (ElementId x = 0; x < p.size(); ++x) CHECK(p.leq(x, x));
}

TEST_CASE("from_covers edge cases") {
  SUBCASE("antichain") {
    auto p = from({"a", "b", "c"}, {});
    CHECK(p.is_graded());
    CHECK(p.max_rank() == 0);
    CHECK(whitney(p) == std::vector<std::size_t>{3});
  }
  SUBCASE("empty poset") {
    auto p = from({}, {});
    CHECK(p.is_graded());
    CHECK(whitney(p).empty());
    CHECK(p.max_rank() == -1);
  }
  SUBCASE("cycle") {
    CHECK_THROWS_AS(from({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PosetError);
    CHECK_THROWS_AS(from({"a"}, {{"a", "a"}}), PosetError);
    CHECK_THROWS_AS(from({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                    PosetError);
  }
  SUBCASE("duplicate label") {
    CHECK_THROWS_WITH_AS(from({"a", "a"}, {}), "duplicate label 'a'", PosetError);
  }
  SUBCASE("unknown label") {
    CHECK_THROWS_AS(from({"a"}, {{"a", "z"}}), PosetError);
  }
  SUBCASE("redundant pairs are reduced") {
    auto p = from({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(p.cover_pairs() == std::vector<CoverPair>{{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
  }
  SUBCASE("invalid ids") {
    auto p = total(2);
    CHECK_THROWS_AS(p.leq(0, 3), PosetError);
    CHECK_THROWS_AS(p.upper_covers(9), PosetError);
  }
}

TEST_CASE("nabla") {
  auto p = example_sym();
  CHECK(nabla(p, Subset{p.id_of("F")}) == Subset{p.id_of("C"), p.id_of("D")});
  CHECK(nabla(p, Subset{}).empty());
  auto b2 = boolean(2);
  CHECK(nabla(b2, Subset{b2.id_of("{1}")}) == Subset{b2.id_of("{1,2}")});
  CHECK_THROWS_AS(nabla(b2, Subset{17}), PosetError);
}

TEST_CASE("gradedness") {
  SUBCASE("total orders") {
    for (std::size_t k = 0; k <= 5; ++k) {
      auto t = total(k);
      CHECK(t.is_graded());
      CHECK(t.max_rank() == static_cast<int>(k));
    }
  }
  SUBCASE("second counterexample levels") {
    auto p = example_uni();
    REQUIRE(p.is_graded());
    CHECK(p.rank(p.id_of("F")) == 0);
    CHECK(p.rank(p.id_of("D")) == 1);
    CHECK(p.rank(p.id_of("E")) == 1);
    CHECK(p.rank(p.id_of("B")) == 2);
    CHECK(p.rank(p.id_of("C")) == 2);
    CHECK(p.rank(p.id_of("A")) == 3);
    CHECK(whitney(p) == std::vector<std::size_t>{1, 2, 2, 1});
  }
  SUBCASE("unequal maximal chains") {
    auto p = from({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}});
    CHECK_FALSE(p.is_graded());
    CHECK_THROWS_AS(p.rank(0), NotGradedError);
    CHECK_THROWS_AS(whitney(p), NotGradedError);
  }
  SUBCASE("ranks consistent but maximal elements at different heights") {
    auto p = from({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(p.is_graded());
  }
  SUBCASE("boolean and isotropic profiles") {
    CHECK(whitney(boolean(3)) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(whitney(isotropic(1)) == std::vector<std::size_t>{1, 2});
  }
}

TEST_CASE("invariants on random posets") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> size(0, 9);
  std::uniform_real_distribution<double> density(0.0, 0.9);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = random_poset(size(rng), density(rng), rng);
    const auto n = p.size();
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (a != b && p.leq(a, b)) CHECK_FALSE(p.leq(b, a));
        for (ElementId c = 0; c < n; ++c) {
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
        }
      }
    }
    CHECK(p.cover_pairs() == transitive_reduction(p.closure()));
    if (p.is_graded()) {
      for (const auto& [a, b] : p.cover_pairs()) CHECK(p.rank(b) == p.rank(a) + 1);
      for (ElementId x = 0; x < n; ++x) CHECK((p.rank(x) == 0) == p.is_minimal(x));
    }
  }
}

TEST_CASE("product") {
  CHECK(is_isomorphic(product(total(1), total(1)), boolean(2)));
  auto single = total(0);
  auto p = example_uni();
  CHECK(is_isomorphic(product(p, single), p));
  CHECK(is_isomorphic(product(single, p), p));

  // Subsets of {1,2,1',2'} avoiding {1,1'} and {2,2'}, counted by size.
  std::vector<std::size_t> by_size(5, 0);
  for (unsigned mask = 0; mask < 16; ++mask) {
    const bool has1 = mask & 1u, has2 = mask & 2u, has1p = mask & 4u, has2p = mask & 8u;
    if ((has1 && has1p) || (has2 && has2p)) continue;
    ++by_size[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  while (!by_size.empty() && by_size.back() == 0) by_size.pop_back();
  CHECK(by_size == std::vector<std::size_t>{1, 4, 4});
  CHECK(whitney(product(isotropic(1), isotropic(1))) == by_size);

  CHECK(power(total(1), 0).size() == 1);
}

TEST_CASE("product laws on random posets") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poset(size(rng), density(rng), rng);
    auto q = random_poset(size(rng), density(rng), rng);
    auto r = random_poset(size(rng), density(rng), rng);
    CHECK(is_isomorphic(product(p, q), product(q, p)));
    CHECK(is_isomorphic(product(product(p, q), r), product(p, product(q, r))));
    if (p.is_graded() && q.is_graded()) {
      CHECK(whitney(product(p, q)) == convolve(whitney(p), whitney(q)));
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(chain_poset(total(1), 3).poset, total(3)));
  CHECK_FALSE(is_isomorphic(boolean(2), total(2)));
  CHECK(is_isomorphic(boolean(3), power(total(1), 3)));
  CHECK_FALSE(is_isomorphic(example_sym(), example_uni()));

  auto map = find_isomorphism(isotropic(2), power(isotropic(1), 2));
  REQUIRE(map);
  CHECK(is_order_isomorphism(isotropic(2), power(isotropic(1), 2), *map));

  SUBCASE("same profile, different structure") {
    // N-shaped posets in two labellings vs two disjoint 2-chains.
    auto n_shape = from({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
    auto z_shape = from({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "d"}});
    auto two_chains = from({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}});
    CHECK(is_isomorphic(n_shape, z_shape));
    CHECK_FALSE(is_isomorphic(n_shape, two_chains));
  }
}

TEST_CASE("isomorphism agrees with exhaustive bijection search") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = size(rng);
    auto p = random_poset(n, density(rng), rng);
    auto q = random_poset(n, density(rng), rng);
    const bool expected = testing::isomorphic_by_permutations(p, q);
    positives += expected ? 1 : 0;
    auto map = find_isomorphism(p, q);
    CHECK(map.has_value() == expected);
    if (map) CHECK(is_order_isomorphism(p, q, *map));
    CHECK(is_isomorphic(p, p));
    CHECK(is_isomorphic(q, p) == expected);
  }
  CHECK(positives > 10);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_poset(7, 0.4, rng);
    auto back = poset_from_json(to_json(p));
    CHECK(back.labels() == p.labels());
    CHECK(back.cover_pairs() == p.cover_pairs());
  }
  auto sym = example_sym();
  const auto path = std::filesystem::path(POSETLAB_TEST_TMP) / "ex1.json";
  save_poset(sym, path);
  CHECK(load_poset(path).cover_pairs() == sym.cover_pairs());

  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"covers": []})")),
                  PosetError);
  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(
                      R"({"labels": ["a"], "covers": [["a"]]})")),
                  PosetError);
  CHECK_THROWS_AS(load_poset("/nonexistent/poset.json"), PosetError);
}
