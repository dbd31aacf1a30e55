#include <doctest.h>

#include <random>
#include <regex>

#include "posetlab/catalog.hpp"
#include "posetlab/chains.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/random_poset.hpp"
#include "posetlab/report.hpp"

using namespace posetlab;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                    std::sregex_iterator()));
}

}  // namespace

TEST_CASE("report of the first counterexample") {
  auto p = chain_poset(example_sym(), 2).poset;
  auto r = analyze(p);
  CHECK(r.graded);
  CHECK(r.rank_symmetric == Verdict::fails);
  CHECK(r.symmetry_witness.has_value());
  CHECK(r.rank_unimodal == Verdict::holds);
  CHECK(validates(p, r));

  auto doc = report_document("ex1[2]", p, r);
  CHECK(doc["expression"] == "ex1[2]");
  CHECK(doc["size"] == 17);
  CHECK(doc["max_rank"] == 4);
  CHECK(doc["whitney"] == nlohmann::json::array({2, 3, 6, 4, 2}));
  CHECK(doc["rank_polynomial"].is_string());
  CHECK(doc["graded"] == true);
  for (const char* name : {"rank_symmetric", "rank_unimodal", "rank_log_concave",
                           "normal", "strongly_sperner"}) {
    REQUIRE(doc["properties"].contains(name));
    const auto& prop = doc["properties"][name];
    CHECK(prop["verdict"].is_string());
    if (prop["verdict"] == "false") CHECK(prop.contains("witness"));
  }
  CHECK(doc["properties"]["rank_symmetric"]["verdict"] == "false");
  CHECK(validate_document(p, doc));
  CHECK(validate_document(p, nlohmann::json::parse(doc.dump())));
}

TEST_CASE("report of an ungraded poset") {
  std::vector<std::pair<std::string, std::string>> covers{{"a", "b"}, {"a", "c"}, {"c", "d"}};
  auto p = Poset::from_covers({"a", "b", "c", "d"}, covers);
  auto r = analyze(p);
  CHECK_FALSE(r.graded);
  CHECK(r.normal == Verdict::not_graded);
  CHECK(to_string(r.normal) == "not graded");
  auto doc = report_document("x", p, r);
  CHECK(doc["whitney"].is_null());
  CHECK(doc["max_rank"].is_null());
  CHECK(doc["properties"]["normal"]["verdict"] == "not graded");
  CHECK(validate_document(p, doc));
}

TEST_CASE("tampered witnesses are rejected") {
  auto p = chain_poset(example_uni(), 2).poset;
  auto doc = report_document("ex2[2]", p, analyze(p));
  REQUIRE(doc["properties"]["rank_unimodal"]["verdict"] == "false");
  CHECK(validate_document(p, doc));
  auto bad = doc;
  bad["properties"]["rank_unimodal"].erase("witness");
  CHECK_FALSE(validate_document(p, bad));
}

TEST_CASE("reports validate on random and catalog posets") {
  std::mt19937_64 rng(1304);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_graded_poset(12, rng);
    auto r = analyze(p);
    CHECK(validates(p, r));
    CHECK(validate_document(p, to_json(p, r)));
  }
  for (const auto& p : {boolean(3), isotropic(2), example_sym(), example_uni(),
                        chain_poset(isotropic(1), 3).poset}) {
    CHECK(validates(p, analyze(p)));
  }
}

TEST_CASE("dot output") {
  auto p = chain_poset(total(1), 3).poset;
  const auto text = to_dot(p, "T(1)[3]");
  CHECK(text == to_dot(p, "T(1)[3]"));
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(text.find("rankdir=BT") != std::string::npos);
  const std::regex node(R"re("[^"]+" \[label=)re");
  const std::regex edge(R"re("[^"]+" -> "[^"]+";)re");
  CHECK(count_matches(text, node) == 4);
  CHECK(count_matches(text, edge) == 3);

  auto i2 = isotropic(2);
  const auto itext = to_dot(i2, "I(2)");
  CHECK(count_matches(itext, node) == 9);
  CHECK(count_matches(itext, edge) == i2.cover_count());
}
