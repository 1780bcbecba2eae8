#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylcomb/ore_algebra.hpp"
#include "weylcomb/qgha.hpp"
#include "weylcomb/star.hpp"

namespace weylcomb {

/// Syntax error or unknown generator, with the byte offset it refers to.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Expr {
  enum class Kind { number, generator, add, sub, mul, neg, pow };
  Kind kind = Kind::number;
  Scalar value;          // number
  std::string name;      // generator
  unsigned exponent = 0; // pow
  std::size_t offset = 0;
  std::vector<Expr> children;

  /// Fully parenthesized form, for debugging and tests.
  std::string to_string() const;
};

/// Parses sums, differences, unary minus, products (explicit '*' or juxtaposition, kept in
/// written order), nonnegative integer powers, parentheses, integers and "a/b" literals.
/// Generators are single letters from `generators`; each entry of `words` (e.g. "hbar") is
/// also accepted as one generator. At end of input errors point at the last token.
Expr parse_expression(const std::string& text, const std::string& generators,
                      const std::vector<std::string>& words = {});

/// Folds the tree with the given leaf constructors; T needs +, -, * and unary -.
template <class T, class Gen, class Num>
T fold_expr(const Expr& e, const Gen& gen, const Num& num) {
  switch (e.kind) {
    case Expr::Kind::number: return num(e.value);
    case Expr::Kind::generator: return gen(e.name);
    case Expr::Kind::add: return fold_expr<T>(e.children[0], gen, num) + fold_expr<T>(e.children[1], gen, num);
    case Expr::Kind::sub: return fold_expr<T>(e.children[0], gen, num) - fold_expr<T>(e.children[1], gen, num);
    case Expr::Kind::mul: return fold_expr<T>(e.children[0], gen, num) * fold_expr<T>(e.children[1], gen, num);
    case Expr::Kind::neg: return -fold_expr<T>(e.children[0], gen, num);
    case Expr::Kind::pow: {
      const T base = fold_expr<T>(e.children[0], gen, num);
      T r = num(Scalar(1));
      for (unsigned i = 0; i < e.exponent; ++i) r = r * base;
      return r;
    }
  }
  throw std::logic_error("bad expression node");
}

/// Univariate polynomial in `var` over `ring`.
Poly parse_poly(const std::string& text, char var, const Ring& ring);
/// Element of the Ore algebra in generators x, y.
OreElement parse_ore(const std::string& text, const OreAlgebraSpec& spec);
/// Element of H_q(f, g) in generators x, y, h.
QghaElement parse_qgha(const std::string& text, const QghaSpec& spec);
/// Commutative polynomial in x, y, hbar over the rationals.
BiPoly parse_bipoly(const std::string& text);

}  // namespace weylcomb
