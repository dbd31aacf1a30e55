#include "posetlab_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "posetlab/analysis.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/expr.hpp"
#include "posetlab/isomorphism.hpp"
#include "posetlab/poset_io.hpp"
#include "posetlab/report.hpp"
#include "posetlab_cli/verify.hpp"

namespace posetlab::cli {
namespace {

// Runs `body`, mapping parse failures to exit 2 and everything else to 3.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "posetlab: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "posetlab: " << e.what() << '\n';
    return kEvaluationError;
  }
}

std::string join_labels(const Poset& p, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += p.label(s[i]);
  }
  return out + "}";
}

std::string tuple(const std::vector<std::size_t>& v) {
  return format_profile(v);
}

std::string describe(const IndexWitness& w, const char* kind) {
  std::ostringstream os;
  const std::string k = kind;
  if (k == "symmetric") {
    os << "rank " << w.indices[0] << " has " << w.counts[0] << " elements, rank "
       << w.indices[1] << " has " << w.counts[1];
  } else if (k == "logconcave") {
    os << "ranks " << tuple(w.indices) << ": " << w.counts[1] << "^2 = "
       << w.counts[1] * w.counts[1] << " < " << w.counts[0] << "*" << w.counts[2]
       << " = " << w.counts[0] * w.counts[2];
  } else {
    os << "ranks " << tuple(w.indices) << " with sizes " << tuple(w.counts);
  }
  return os.str();
}

std::string describe(const Poset& p, const NormalityWitness& w) {
  std::ostringstream os;
  os << "level " << w.level << ": A = " << join_labels(p, w.subset)
     << ", shadow = " << join_labels(p, w.shadow) << ", " << w.subset.size()
     << "/" << w.level_size << " > " << w.shadow.size() << "/"
     << w.next_level_size;
  return os.str();
}

std::string describe(const Poset& p, const SpernerWitness& w) {
  std::ostringstream os;
  os << "j = " << w.j << ": " << w.family.size << " elements in " << w.j
     << " antichains > " << w.level_bound << " in the largest levels;";
  for (const auto& a : w.family.antichains) os << ' ' << join_labels(p, a);
  return os.str();
}

void print_row(std::ostream& out, const std::string& name,
               const std::string& value, const std::string& note = {}) {
  out << std::left << std::setw(18) << name;
  if (note.empty()) {
    out << value << '\n';
  } else {
    out << std::setw(12) << value << note << '\n';
  }
}

}  // namespace

int report(const std::string& expr, bool json, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    const auto e = parse(expr);
    const auto p = evaluate(e);
    const auto r = analyze(p);
    if (json) {
      out << report_document(print(e), p, r).dump(2) << '\n';
      return kOk;
    }
    print_row(out, "expression", print(e));
    print_row(out, "size", std::to_string(p.size()));
    print_row(out, "graded", p.is_graded() ? "true" : "false");
    if (p.is_graded()) {
      print_row(out, "max rank", std::to_string(p.max_rank()));
      print_row(out, "whitney", format_profile(whitney(p)));
      print_row(out, "rank polynomial", format_polynomial(rank_polynomial(p)));
    }
    print_row(out, "rank_symmetric", to_string(r.rank_symmetric),
              r.symmetry_witness ? describe(*r.symmetry_witness, "symmetric") : "");
    print_row(out, "rank_unimodal", to_string(r.rank_unimodal),
              r.unimodality_witness ? describe(*r.unimodality_witness, "unimodal")
                                    : "");
    print_row(out, "rank_log_concave", to_string(r.rank_log_concave),
              r.log_concavity_witness
                  ? describe(*r.log_concavity_witness, "logconcave")
                  : "");
    print_row(out, "normal", to_string(r.normal),
              r.normality_witness ? describe(p, *r.normality_witness) : "");
    print_row(out, "strongly_sperner", to_string(r.strongly_sperner),
              r.sperner_witness ? describe(p, *r.sperner_witness) : "");
    return kOk;
  });
}

int dot(const std::string& expr, const std::string& path, std::ostream& out,
        std::ostream& err) {
  return guarded(err, [&] {
    const auto e = parse(expr);
    const auto text = to_dot(evaluate(e), print(e));
    if (path.empty() || path == "-") {
      out << text;
      return kOk;
    }
    std::ofstream file(path);
    if (!file) throw PosetError("cannot write '" + path + "'");
    file << text;
    return kOk;
  });
}

int whitney(const std::string& expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto p = evaluate(expr);
    if (!p.is_graded()) {
      out << "not graded\n";
      return kEvaluationError;
    }
    out << format_profile(posetlab::whitney(p)) << '\n';
    return kOk;
  });
}

int check(const std::string& expr, const std::string& property,
          std::ostream& out, std::ostream& err) {
  static const char* const known[] = {"symmetric", "unimodal", "logconcave",
                                      "normal", "sperner"};
  if (std::find(std::begin(known), std::end(known), property) == std::end(known)) {
    err << "posetlab: unknown property '" << property << "'\n";
    return kUsageError;
  }
  return guarded(err, [&] {
    const auto p = evaluate(expr);
    if (!p.is_graded()) {
      out << property << ": not graded\n";
      return kEvaluationError;
    }
    std::optional<std::string> witness;
    if (property == "symmetric") {
      if (auto w = symmetry_violation(p)) witness = describe(*w, "symmetric");
    } else if (property == "unimodal") {
      if (auto w = unimodality_violation(p)) witness = describe(*w, "unimodal");
    } else if (property == "logconcave") {
      if (auto w = log_concavity_violation(p)) witness = describe(*w, "logconcave");
    } else if (property == "normal") {
      if (auto w = normality_violation(p)) witness = describe(p, *w);
    } else {
      if (auto w = sperner_violation(p)) witness = describe(p, *w);
    }
    out << property << ": " << (witness ? "false" : "true") << '\n';
    if (witness) {
      out << "witness: " << *witness << '\n';
      return kPropertyFalse;
    }
    return kOk;
  });
}

int iso(const std::string& lhs, const std::string& rhs, std::ostream& out,
        std::ostream& err) {
  return guarded(err, [&] {
    const auto p = evaluate(lhs);
    const auto q = evaluate(rhs);
    const auto map = find_isomorphism(p, q);
    if (!map) {
      out << "not isomorphic\n";
      return kPropertyFalse;
    }
    out << "isomorphic\n";
    for (ElementId x = 0; x < p.size(); ++x) {
      out << "  " << p.label(x) << " -> " << q.label((*map)[x]) << '\n';
    }
    return kOk;
  });
}

int export_json(const std::string& expr, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << to_json(evaluate(expr)).dump(2) << '\n';
    return kOk;
  });
}

int verify_paper(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = run_acceptance_suite();
    bool all = true;
    out << std::left << std::setw(4) << "#" << std::setw(34) << "check"
        << std::setw(7) << "result" << "detail\n";
    for (const auto& r : results) {
      out << std::left << std::setw(4) << r.id << std::setw(34) << r.name
          << std::setw(7) << (r.passed ? "PASS" : "FAIL") << r.detail << '\n';
      all = all && r.passed;
    }
    return all ? kOk : kPropertyFalse;
  });
}

}  // namespace posetlab::cli
