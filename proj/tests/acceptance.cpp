// Runs every acceptance criterion in process, then repeats the CLI checks
// of criterion 9 against the installed binary.
#include <array>
#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <sys/wait.h>

#include "posetlab_cli/verify.hpp"

namespace {

struct Run {
  int status = -1;
  std::string output;
};

Run run(const std::string& args) {
  const std::string command = std::string("\"") + POSETLAB_BINARY + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                    std::sregex_iterator()));
}

}  // namespace

int main() {
  bool all = true;
  auto line = [&](const std::string& id, const std::string& name, bool ok,
                  const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
    all = all && ok;
  };

  for (const auto& r : posetlab::cli::run_acceptance_suite()) {
    line(std::to_string(r.id), r.name, r.passed, r.detail);
  }

  const auto verify = run("verify-paper");
  line("9a", "binary: verify-paper exits 0", verify.status == 0,
       "exit " + std::to_string(verify.status));

  const auto check = run("check \"ex2[2]\" --property unimodal");
  const bool witness = check.output.find("(2,3,4)") != std::string::npos &&
                       check.output.find("(4,3,4)") != std::string::npos;
  line("9b", "binary: check ex2[2] unimodal exits 1 with witness",
       check.status == 1 && witness, "exit " + std::to_string(check.status));

  const auto dot = run("dot \"T(1)[3]\" -o -");
  const auto nodes = count(dot.output, std::regex(R"re("[^"]+" \[label=)re"));
  const auto edges = count(dot.output, std::regex(R"re("[^"]+" -> "[^"]+";)re"));
  line("9c", "binary: dot T(1)[3] has 4 nodes and 3 edges",
       dot.status == 0 && nodes == 4 && edges == 3,
       std::to_string(nodes) + " nodes, " + std::to_string(edges) + " edges");

  const auto bad = run("report \"B(\"");
  line("9d", "binary: parse error exits 2", bad.status == 2,
       "exit " + std::to_string(bad.status));

  return all ? 0 : 1;
}
