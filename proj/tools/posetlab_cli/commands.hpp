#pragma once

#include <iosfwd>
#include <string>

namespace posetlab::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kUsageError = 2,
  kEvaluationError = 3,
};

// Each command writes its result to `out` and diagnostics to `err`, and
// returns the process exit code.

int report(const std::string& expr, bool json, std::ostream& out,
           std::ostream& err);
/// Writes to `path`, or to `out` when `path` is empty or "-".
int dot(const std::string& expr, const std::string& path, std::ostream& out,
        std::ostream& err);
int whitney(const std::string& expr, std::ostream& out, std::ostream& err);
/// property: symmetric | unimodal | logconcave | normal | sperner
int check(const std::string& expr, const std::string& property,
          std::ostream& out, std::ostream& err);
int iso(const std::string& lhs, const std::string& rhs, std::ostream& out,
        std::ostream& err);
/// Poset JSON document for the expression, loadable with load("...").
int export_json(const std::string& expr, std::ostream& out, std::ostream& err);
int verify_paper(std::ostream& out, std::ostream& err);

}  // namespace posetlab::cli
