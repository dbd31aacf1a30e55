#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posetlab/catalog.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Expression tree for building posets, e.g. "(T(1)*T(1))[2]".
///
///   EXPR := TERM { '*' TERM }
///   TERM := ATOM { '[' INT ']' }
///   ATOM := 'B(' INT ')' | 'T(' INT ')' | 'I(' INT ')' | 'I(' INT ',' INT ')'
///         | 'ex1' | 'ex2' | 'load("' PATH '")' | '(' EXPR ')'
struct Expr {
  enum class Kind { family, load, chain, product };

  Kind kind = Kind::family;
  FamilySpec family;
  std::string path;
  std::size_t k = 0;
  std::vector<Expr> children;

  static Expr leaf(FamilySpec spec);
  static Expr load(std::string path);
  static Expr chain(Expr child, std::size_t k);
  static Expr product(Expr left, Expr right);

  bool operator==(const Expr& other) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Throws ParseError with the byte offset of the offending token.
Expr parse(std::string_view input);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Builds the poset bottom-up. Load errors surface as PosetError.
Poset evaluate(const Expr& e);
Poset evaluate(std::string_view input);

}  // namespace posetlab
