#include "posetlab_cli/verify.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

#include "posetlab/analysis.hpp"
#include "posetlab/catalog.hpp"
#include "posetlab/chains.hpp"
#include "posetlab/isomorphism.hpp"
#include "posetlab/random_poset.hpp"
#include "posetlab_cli/commands.hpp"

namespace posetlab::cli {
namespace {

constexpr std::uint64_t kSeed = 0x5eed2a7;

struct Named {
  std::string name;
  Poset poset;
};

std::string str(std::size_t k) { return std::to_string(k); }

// Collects the first few failures of a criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_.push_back(what);
  }

  CriterionResult result(int id, const std::string& name,
                         const std::string& summary) const {
    CriterionResult r{id, name, failures_ == 0, summary};
    if (failures_ > 0) {
      r.detail = std::to_string(failures_) + " of " + std::to_string(checks_) +
                 " checks failed:";
      for (const auto& n : notes_) r.detail += " " + n + ";";
    } else if (r.detail.empty()) {
      r.detail = std::to_string(checks_) + " checks";
    } else {
      r.detail += " (" + std::to_string(checks_) + " checks)";
    }
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::vector<Named> base_families() {
  std::vector<Named> out;
  for (std::size_t m = 0; m <= 4; ++m) out.push_back({"T(" + str(m) + ")", total(m)});
  for (std::size_t n = 0; n <= 4; ++n) out.push_back({"B(" + str(n) + ")", boolean(n)});
  for (std::size_t n = 0; n <= 3; ++n) out.push_back({"I(" + str(n) + ")", isotropic(n)});
  for (std::size_t n = 0; n <= 2; ++n) {
    out.push_back({"I(" + str(n) + ",3)", isotropic_general(n, 3)});
  }
  out.push_back({"ex1", example_sym()});
  out.push_back({"ex2", example_uni()});
  return out;
}

// Catalog posets and their chain posets (k <= 3) with at most `limit`
// elements.
std::vector<Named> small_catalog(std::size_t limit) {
  std::vector<Named> bases;
  for (std::size_t m = 0; m <= 4; ++m) bases.push_back({"T(" + str(m) + ")", total(m)});
  for (std::size_t n = 0; n <= 3; ++n) bases.push_back({"B(" + str(n) + ")", boolean(n)});
  for (std::size_t n = 0; n <= 2; ++n) bases.push_back({"I(" + str(n) + ")", isotropic(n)});
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      bases.push_back({"I(" + str(n) + "," + str(m) + ")", isotropic_general(n, m)});
    }
  }
  bases.push_back({"ex1", example_sym()});
  bases.push_back({"ex2", example_uni()});

  std::vector<Named> out;
  for (const auto& b : bases) {
    if (b.poset.size() > limit) continue;
    out.push_back(b);
    for (std::size_t k = 2; k <= 3; ++k) {
      auto c = chain_poset(b.poset, k).poset;
      if (c.size() <= limit) out.push_back({b.name + "[" + str(k) + "]", std::move(c)});
    }
  }
  return out;
}

std::vector<Named> random_graded_corpus() {
  std::mt19937_64 rng(kSeed + 6);
  std::vector<Named> out;
  for (std::size_t i = 0; i < 200; ++i) {
    out.push_back({"random#" + str(i), random_graded_poset(12, rng)});
  }
  return out;
}

std::vector<Named> theorem_family() {
  std::vector<Named> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      out.push_back({"B(" + str(n) + ")[" + str(k) + "]",
                     chain_poset(boolean(n), k).poset});
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      out.push_back({"I(" + str(n) + ")[" + str(k) + "]",
                     chain_poset(isotropic(n), k).poset});
    }
  }
  return out;
}

std::vector<Named> remark_family() {
  std::vector<Named> out;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t k = 1; k <= 3; ++k) {
        out.push_back({"I(" + str(n) + "," + str(m) + ")[" + str(k) + "]",
                       chain_poset(isotropic_general(n, m), k).poset});
      }
    }
  }
  return out;
}

bool connected(const Poset& p) {
  if (p.empty()) return true;
  std::vector<bool> seen(p.size(), false);
  std::vector<ElementId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto span : {p.upper_covers(v), p.lower_covers(v)}) {
      for (auto w : span) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == p.size();
}

Polynomial profile_polynomial(const Poset& p) {
  auto counts = whitney(p);
  return Polynomial(counts.begin(), counts.end());
}

// 1. P[k] is graded, ranks add up coordinatewise, top rank is k times.
CriterionResult gradedness() {
  Tally t;
  for (const auto& [name, p] : base_families()) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto label = name + "[" + str(k) + "]";
      const auto c = chain_poset(p, k);
      t.check(c.poset.is_graded(), label + " graded");
      if (!c.poset.is_graded()) continue;
      t.check(c.poset.max_rank() == static_cast<int>(k) * p.max_rank(),
              label + " max rank");
      bool ranks = true;
      for (ElementId x = 0; x < c.poset.size(); ++x) {
        ranks = ranks && c.poset.rank(x) == multichain_rank(p, c.chains[x]);
      }
      t.check(ranks, label + " element ranks");
    }
  }
  return t.result(1, "gradedness and rank of P[k]", "");
}

// 2. The two counterexamples.
CriterionResult counterexamples() {
  Tally t;
  const auto sym = example_sym();
  const auto sym2 = chain_poset(sym, 2).poset;
  const auto uni = example_uni();
  const auto uni2 = chain_poset(uni, 2).poset;
  const WhitneyProfile p_sym{2, 3, 2}, p_sym2{2, 3, 6, 4, 2};
  const WhitneyProfile p_uni{1, 2, 2, 1}, p_uni2{1, 2, 4, 3, 4, 2, 1};
  t.check(whitney(sym) == p_sym, "whitney(ex1)");
  t.check(is_rank_symmetric(sym), "ex1 symmetric");
  t.check(whitney(sym2) == p_sym2, "whitney(ex1[2])");
  t.check(!is_rank_symmetric(sym2), "ex1[2] not symmetric");
  t.check(whitney(uni) == p_uni, "whitney(ex2)");
  t.check(is_rank_unimodal(uni), "ex2 unimodal");
  t.check(whitney(uni2) == p_uni2, "whitney(ex2[2])");
  t.check(!is_rank_unimodal(uni2), "ex2[2] not unimodal");
  t.check(!is_rank_log_concave(uni2), "ex2[2] not log-concave");
  return t.result(2, "counterexamples ex1, ex2",
                  "ex1 " + format_profile(p_sym) + " -> " + format_profile(whitney(sym2)) +
                      ", ex2 " + format_profile(p_uni) + " -> " +
                      format_profile(whitney(uni2)));
}

// 3. Isomorphism identities, including products of chain posets.
CriterionResult isomorphisms() {
  Tally t;
  for (std::size_t n = 0; n <= 4; ++n) {
    t.check(is_isomorphic(boolean(n), power(total(1), n)), "B(" + str(n) + ") ~ T(1)^n");
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    t.check(is_isomorphic(chain_poset(total(1), k).poset, total(k)),
            "T(1)[" + str(k) + "] ~ T(k)");
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    t.check(is_isomorphic(isotropic(n), power(isotropic(1), n)),
            "I(" + str(n) + ") ~ I(1)^n");
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      t.check(is_isomorphic(chain_poset(boolean(n), k).poset, power(total(k), n)),
              "B(" + str(n) + ")[" + str(k) + "] ~ T(k)^n");
    }
  }
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int pair = 0; pair < 50; ++pair) {
    const auto p = random_poset(size(rng), density(rng), rng);
    const auto q = random_poset(size(rng), density(rng), rng);
    const auto pq = product(p, q);
    for (std::size_t k = 1; k <= 3; ++k) {
      t.check(is_isomorphic(chain_poset(pq, k).poset,
                            product(chain_poset(p, k).poset, chain_poset(q, k).poset)),
              "random pair " + std::to_string(pair) + " k=" + str(k));
    }
  }
  return t.result(3, "isomorphism identities", "");
}

// 4. B(n)[k] and I(n)[k] are normal, log-concave and strongly Sperner.
CriterionResult main_theorems() {
  Tally t;
  const Polynomial unit{1};
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto label = "B(" + str(n) + ")[" + str(k) + "]";
      const auto p = chain_poset(boolean(n), k).poset;
      std::size_t expect = 1;
      for (std::size_t i = 0; i < n; ++i) expect *= k + 1;
      t.check(p.size() == expect, label + " size");
      t.check(profile_polynomial(p) == power(Polynomial(k + 1, 1), n),
              label + " whitney");
      t.check(is_normal(p), label + " normal");
      t.check(is_rank_log_concave(p), label + " log-concave");
      t.check(is_strongly_sperner(p), label + " strongly Sperner");
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto label = "I(" + str(n) + ")[" + str(k) + "]";
      const auto p = chain_poset(isotropic(n), k).poset;
      std::size_t expect = 1;
      for (std::size_t i = 0; i < n; ++i) expect *= 2 * k + 1;
      Polynomial factor(k + 1, 2);
      factor[0] = 1;
      t.check(p.size() == expect, label + " size");
      t.check(profile_polynomial(p) == power(factor, n), label + " whitney");
      t.check(is_normal(p), label + " normal");
      t.check(is_rank_log_concave(p), label + " log-concave");
      t.check(is_strongly_sperner(p), label + " strongly Sperner");
    }
  }
  return t.result(4, "B(n)[k], I(n)[k] theorems", "");
}

// 5. More mark classes.
CriterionResult remark() {
  Tally t;
  for (const auto& [name, p] : remark_family()) {
    t.check(is_normal(p), name + " normal");
    t.check(is_rank_log_concave(p), name + " log-concave");
  }
  return t.result(5, "I(n,m)[k] generalization", "");
}

// 6. Flow-based checks against exhaustive enumeration.
CriterionResult oracles() {
  Tally t;
  auto corpus = small_catalog(14);
  const auto catalog_count = corpus.size();
  auto randoms = random_graded_corpus();
  corpus.insert(corpus.end(), randoms.begin(), randoms.end());
  for (const auto& [name, p] : corpus) {
    if (p.is_graded()) {
      t.check(is_normal(p) == is_normal_exhaustive(p), name + " normality");
    }
    for (std::size_t j = 1; j <= 4; ++j) {
      const auto family = max_j_family(p, j);
      t.check(family.size == max_j_family_bruteforce(p, j) && validates(p, family),
              name + " d_" + str(j));
    }
  }
  return t.result(6, "flow vs brute-force oracles",
                  std::to_string(catalog_count) + " catalog + " +
                      std::to_string(randoms.size()) + " random posets");
}

// 7. One-coordinate cover rule against the order definition.
CriterionResult cover_rule() {
  Tally t;
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poset(size(rng), density(rng), rng);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto rule = enumerate_multichains(p, k);
      t.check(rule.covers == chain_covers_by_definition(p, k),
              "random poset " + std::to_string(i) + " k=" + str(k));
    }
  }
  return t.result(7, "cover characterization of P[k]", "");
}

// 8. Known implications between the properties, on the whole corpus.
CriterionResult consistency() {
  Tally t;
  std::vector<Named> corpus = small_catalog(14);
  for (auto&& group : {theorem_family(), remark_family(), random_graded_corpus()}) {
    corpus.insert(corpus.end(), group.begin(), group.end());
  }
  corpus.push_back({"ex1[2]", chain_poset(example_sym(), 2).poset});
  corpus.push_back({"ex2[2]", chain_poset(example_uni(), 2).poset});

  std::size_t normal_count = 0;
  for (const auto& [name, p] : corpus) {
    if (!p.is_graded()) continue;
    if (is_rank_log_concave(p)) {
      t.check(is_rank_unimodal(p), name + " log-concave but not unimodal");
    }
    if (connected(p) && is_normal(p)) {
      ++normal_count;
      t.check(is_strongly_sperner(p), name + " normal but not strongly Sperner");
    }
  }

  // Products of normal, log-concave catalog posets of at most 30 elements.
  std::vector<Named> factors;
  for (auto& n : small_catalog(30)) {
    if (n.poset.is_graded() && n.poset.size() >= 2 && is_normal(n.poset) &&
        is_rank_log_concave(n.poset)) {
      factors.push_back(std::move(n));
    }
  }
  factors.push_back({"B(4)", boolean(4)});
  factors.push_back({"I(3)", isotropic(3)});
  std::size_t products = 0;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      const auto pq = product(factors[a].poset, factors[b].poset);
      ++products;
      t.check(is_normal(pq) && is_rank_log_concave(pq),
              factors[a].name + "*" + factors[b].name + " not normal/log-concave");
    }
  }
  return t.result(8, "consistency with known results",
                  std::to_string(corpus.size()) + " posets, " +
                      std::to_string(normal_count) + " normal, " +
                      std::to_string(products) + " products");
}

// 9. Command-line behaviour, run in-process.
CriterionResult command_line(bool earlier_passed) {
  Tally t;
  std::ostringstream out, err;
  const int code = check("ex2[2]", "unimodal", out, err);
  t.check(code == kPropertyFalse, "check ex2[2] unimodal exit code");
  t.check(out.str().find("(2,3,4)") != std::string::npos &&
              out.str().find("(4,3,4)") != std::string::npos,
          "check ex2[2] unimodal witness");

  std::ostringstream graph;
  t.check(dot("T(1)[3]", "", graph, err) == kOk, "dot T(1)[3] exit code");
  const auto text = graph.str();
  const std::regex node_line(R"(^\s*"[^"]*" \[label=)");
  const std::regex edge_line(R"(^\s*"[^"]*" -> "[^"]*";)");
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (std::regex_search(line, node_line)) ++nodes;
    if (std::regex_search(line, edge_line)) ++edges;
  }
  t.check(nodes == 4 && edges == 3, "dot T(1)[3] shape");
  t.check(earlier_passed, "criteria 1-8");
  return t.result(9, "command line", "check exit " + std::to_string(code) + ", dot " +
                                         std::to_string(nodes) + " nodes " +
                                         std::to_string(edges) + " edges");
}

}  // namespace

std::vector<CoverPair> chain_covers_by_definition(const Poset& p, std::size_t k) {
  const std::size_t n = p.size();
  std::vector<Multichain> chains;
  if (n > 0) {
    Multichain tuple(k, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t i = 1; i < k && ok; ++i) ok = p.leq(tuple[i - 1], tuple[i]);
      if (ok) chains.push_back(tuple);
      std::size_t pos = k;
      while (pos > 0 && ++tuple[pos - 1] == n) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }
  const std::size_t m = chains.size();
  auto below = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!p.leq(chains[a][i], chains[b][i])) return false;
    }
    return true;
  };
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = below(a, b);
  }
  std::vector<CoverPair> covers;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool between = false;
      for (std::size_t z = 0; z < m && !between; ++z) {
        between = z != a && z != b && leq[a][z] && leq[z][b];
      }
      if (!between) covers.emplace_back(a, b);
    }
  }
  return covers;
}

const std::vector<Criterion>& acceptance_suite() {
  static const std::vector<Criterion> suite{
      {1, "gradedness and rank of P[k]", gradedness},
      {2, "counterexamples ex1, ex2", counterexamples},
      {3, "isomorphism identities", isomorphisms},
      {4, "B(n)[k], I(n)[k] theorems", main_theorems},
      {5, "I(n,m)[k] generalization", remark},
      {6, "flow vs brute-force oracles", oracles},
      {7, "cover characterization of P[k]", cover_rule},
      {8, "consistency with known results", consistency},
  };
  return suite;
}

std::vector<CriterionResult> run_acceptance_suite() {
  std::vector<CriterionResult> results;
  bool all = true;
  for (const auto& c : acceptance_suite()) {
    try {
      results.push_back(c.run());
    } catch (const std::exception& e) {
      results.push_back({c.id, c.name, false, std::string("exception: ") + e.what()});
    }
    all = all && results.back().passed;
  }
  results.push_back(command_line(all));
  return results;
}

}  // namespace posetlab::cli
