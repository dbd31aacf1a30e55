#include <doctest.h>

#include "posetlab/analysis.hpp"
#include "posetlab/catalog.hpp"
#include "posetlab/chains.hpp"
#include "posetlab/isomorphism.hpp"

using namespace posetlab;

TEST_CASE("total orders") {
  CHECK(total(0).size() == 1);
  CHECK(is_isomorphic(total(1), boolean(1)));
  CHECK(whitney(total(3)) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("boolean algebras") {
  auto b0 = boolean(0);
  CHECK(b0.labels() == std::vector<std::string>{"∅"});
  auto b2 = boolean(2);
  std::vector<std::string> labels = b2.labels();
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"{1,2}", "{1}", "{2}", "∅"});
  auto b3 = boolean(3);
  CHECK(b3.max_rank() == 3);
  CHECK(whitney(b3) == std::vector<std::size_t>{1, 3, 3, 1});
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(is_isomorphic(boolean(n), power(total(1), n)));
  }
}

TEST_CASE("isotropic posets") {
  auto i1 = isotropic(1);
  REQUIRE(i1.size() == 3);
  const auto empty = i1.id_of("∅"), one = i1.id_of("{1}"), one_p = i1.id_of("{1′}");
  CHECK(i1.less(empty, one));
  CHECK(i1.less(empty, one_p));
  CHECK_FALSE(i1.comparable(one, one_p));

  CHECK(whitney(isotropic(2)) == std::vector<std::size_t>{1, 4, 4});
  std::size_t three_to_n = 1;
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(isotropic(n).size() == three_to_n);
    three_to_n *= 3;
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(is_isomorphic(isotropic(n), power(isotropic(1), n)));
  }
  CHECK(isotropic(2).find("{1,2′}").has_value());
}

TEST_CASE("isotropic_general") {
  CHECK(is_isomorphic(isotropic_general(2, 1), boolean(2)));
  CHECK(isotropic_general(2, 1).labels() == boolean(2).labels());
  CHECK(isotropic_general(2, 2).labels() == isotropic(2).labels());

  auto three = isotropic_general(1, 3);
  CHECK(three.size() == 4);
  CHECK(whitney(three) == std::vector<std::size_t>{1, 3});
  CHECK(three.find("{1″}").has_value());

  auto five = isotropic_general(1, 5);
  CHECK(five.find("{1‴}").has_value());
  CHECK(five.find("{1^(4)}").has_value());

  for (std::size_t m = 1; m <= 3; ++m) {
    std::size_t expect = 1;
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(isotropic_general(n, m).size() == expect);
      expect *= m + 1;
    }
  }
  CHECK_THROWS_AS(isotropic_general(2, 0), PosetError);
}

TEST_CASE("counterexample posets match the drawings") {
  auto sym = example_sym();
  CHECK(whitney(sym) == std::vector<std::size_t>{2, 3, 2});
  CHECK(sym.cover_count() == 7);
  auto uni = example_uni();
  CHECK(whitney(uni) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(uni.cover_count() == 6);
  CHECK(chain_poset(uni, 2).poset.size() == 17);
}

TEST_CASE("chain posets of the families") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(is_isomorphic(chain_poset(boolean(n), k).poset, power(total(k), n)));
      auto expected = power(Polynomial(k + 1, 1), n);
      CHECK(rank_polynomial(chain_poset(boolean(n), k).poset) == expected);
    }
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<std::size_t> expected(k + 1, 2);
    expected[0] = 1;
    CHECK(whitney(chain_poset(isotropic(1), k).poset) == expected);
  }
}

TEST_CASE("make and describe") {
  CHECK(describe({Family::boolean, 3, 1}) == "B(3)");
  CHECK(describe({Family::isotropic_general, 2, 3}) == "I(2,3)");
  CHECK(describe({Family::example_uni, 0, 1}) == "ex2");
  CHECK(make({Family::isotropic, 2, 2}).size() == 9);
}
