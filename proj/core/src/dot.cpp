#include "posetlab/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace posetlab {
namespace {

std::string replace_all(std::string s, const std::string& from,
                        const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string ascii_primes(std::string s) {
  s = replace_all(std::move(s), "‴", "'''");
  s = replace_all(std::move(s), "″", "''");
  return replace_all(std::move(s), "′", "'");
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& title) {
  std::vector<std::string> names(p.size());
  std::set<std::string> distinct;
  for (ElementId x = 0; x < p.size(); ++x) {
    names[x] = ascii_primes(p.label(x));
    distinct.insert(names[x]);
  }
  if (distinct.size() != p.size()) {
    for (ElementId x = 0; x < p.size(); ++x) names[x] = "n" + std::to_string(x);
  }

  std::map<int, std::vector<ElementId>> levels;
  for (ElementId x = 0; x < p.size(); ++x) {
    levels[p.is_graded() ? p.rank(x) : p.height(x)].push_back(x);
  }

  std::ostringstream os;
  os << "digraph " << quote(title) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  os << "  edge [arrowhead=none];\n";
  for (const auto& [rank, members] : levels) {
    os << "  subgraph rank_" << rank << " {\n";
    os << "    rank=same;\n";
    for (auto x : members) {
      os << "    " << quote(names[x]) << " [label=" << quote(p.label(x)) << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& [a, b] : p.cover_pairs()) {
    os << "  " << quote(names[a]) << " -> " << quote(names[b]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace posetlab
