#include "posetlab/expr.hpp"

#include <cctype>
#include <limits>

#include "posetlab/chains.hpp"
#include "posetlab/poset_io.hpp"

namespace posetlab {

Expr Expr::leaf(FamilySpec spec) {
  Expr e;
  e.kind = Kind::family;
  e.family = spec;
  // m only means something for I(n,m); pin it elsewhere so equal posets
  // compare equal.
  if (spec.family == Family::isotropic) e.family.m = 2;
  else if (spec.family != Family::isotropic_general) e.family.m = 1;
  if (spec.family == Family::example_sym || spec.family == Family::example_uni) e.family.n = 0;
  return e;
}

Expr Expr::load(std::string path) {
  Expr e;
  e.kind = Kind::load;
  e.path = std::move(path);
  return e;
}

Expr Expr::chain(Expr child, std::size_t k) {
  Expr e;
  e.kind = Kind::chain;
  e.k = k;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::product(Expr left, Expr right) {
  Expr e;
  e.kind = Kind::product;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

bool Expr::operator==(const Expr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::family: return family == other.family;
    case Kind::load: return path == other.path;
    case Kind::chain: return k == other.k && children == other.children;
    case Kind::product: return children == other.children;
  }
  return false;
}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": " + message),
      offset_(offset) {}

namespace {

constexpr std::size_t kMaxParameter = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', got end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::size_t integer() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative parameter");
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    const auto start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxParameter) {
        pos_ = start;
        fail("parameter too large");
      }
      ++pos_;
    }
    return value;
  }

  bool keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const auto end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) {
      return false;
    }
    pos_ = end;
    return true;
  }

  Expr expr() {
    Expr left = term();
    while (peek() == '*') {
      ++pos_;
      left = Expr::product(std::move(left), term());
    }
    return left;
  }

  Expr term() {
    Expr e = atom();
    while (peek() == '[') {
      ++pos_;
      const auto at = pos_;
      const auto k = integer();
      if (k == 0) {
        pos_ = at;
        skip_space();
        fail("chain length must be at least 1");
      }
      expect(']');
      e = Expr::chain(std::move(e), k);
    }
    return e;
  }

  Expr family(Family f) {
    expect('(');
    const auto n = integer();
    expect(')');
    return Expr::leaf({f, n, f == Family::isotropic ? 2u : 1u});
  }

  Expr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (keyword("ex1")) return Expr::leaf({Family::example_sym, 0, 1});
    if (keyword("ex2")) return Expr::leaf({Family::example_uni, 0, 1});
    if (keyword("load")) {
      expect('(');
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected '\"'");
      const auto start = ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated path string");
      std::string path(text_.substr(start, pos_ - start));
      ++pos_;
      expect(')');
      return Expr::load(std::move(path));
    }
    if (keyword("B")) return family(Family::boolean);
    if (keyword("T")) return family(Family::total);
    if (keyword("I")) {
      expect('(');
      const auto n = integer();
      if (peek() == ',') {
        ++pos_;
        const auto at = pos_;
        const auto m = integer();
        if (m == 0) {
          pos_ = at;
          skip_space();
          fail("mark class count must be at least 1");
        }
        expect(')');
        return Expr::leaf({Family::isotropic_general, n, m});
      }
      expect(')');
      return Expr::leaf({Family::isotropic, n, 2});
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::family: return describe(e.family);
    case Expr::Kind::load: return "load(\"" + e.path + "\")";
    case Expr::Kind::chain: {
      const auto& c = e.children[0];
      auto inner = print(c);
      if (c.kind == Expr::Kind::product) inner = "(" + inner + ")";
      return inner + "[" + std::to_string(e.k) + "]";
    }
    case Expr::Kind::product: {
      const auto& r = e.children[1];
      auto right = print(r);
      if (r.kind == Expr::Kind::product) right = "(" + right + ")";
      return print(e.children[0]) + "*" + right;
    }
  }
  return {};
}

Poset evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::family: return make(e.family);
    case Expr::Kind::load: return load_poset(e.path);
    case Expr::Kind::chain: return chain_poset(evaluate(e.children[0]), e.k).poset;
    case Expr::Kind::product:
      return product(evaluate(e.children[0]), evaluate(e.children[1]));
  }
  throw PosetError("bad expression node");
}

Poset evaluate(std::string_view input) { return evaluate(parse(input)); }

}  // namespace posetlab
