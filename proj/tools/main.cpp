#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posetlab_cli/commands.hpp"

namespace cli = posetlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"posetlab: finite posets, chain posets and Sperner-type properties"};
  app.require_subcommand(1);

  std::string expr, other, out_path, property;
  bool json = false;

  auto* report = app.add_subcommand("report", "Print size, Whitney numbers and properties");
  report->add_option("EXPR", expr, "Poset expression, e.g. \"B(3)[2]\"")->required();
  report->add_flag("--json", json, "Emit a JSON document");

  auto* dot = app.add_subcommand("dot", "Write the Hasse diagram in DOT format");
  dot->add_option("EXPR", expr, "Poset expression")->required();
  dot->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* whitney = app.add_subcommand("whitney", "Print the Whitney numbers");
  whitney->add_option("EXPR", expr, "Poset expression")->required();

  auto* check = app.add_subcommand("check", "Test one property; exit 1 if it fails");
  check->add_option("EXPR", expr, "Poset expression")->required();
  check->add_option("--property", property, "Property to test")
      ->required()
      ->check(CLI::IsMember({"symmetric", "unimodal", "logconcave", "normal", "sperner"}));

  auto* iso = app.add_subcommand("iso", "Test two posets for isomorphism; exit 1 if not");
  iso->add_option("EXPR", expr, "First poset expression")->required();
  iso->add_option("OTHER", other, "Second poset expression")->required();

  auto* exp = app.add_subcommand("export", "Print the poset as a JSON document");
  exp->add_option("EXPR", expr, "Poset expression")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }

  if (report->parsed()) return cli::report(expr, json, std::cout, std::cerr);
  if (dot->parsed()) return cli::dot(expr, out_path, std::cout, std::cerr);
  if (whitney->parsed()) return cli::whitney(expr, std::cout, std::cerr);
  if (check->parsed()) return cli::check(expr, property, std::cout, std::cerr);
  if (iso->parsed()) return cli::iso(expr, other, std::cout, std::cerr);
  if (exp->parsed()) return cli::export_json(expr, std::cout, std::cerr);
  if (verify->parsed()) return cli::verify_paper(std::cout, std::cerr);
  return cli::kUsageError;
}
