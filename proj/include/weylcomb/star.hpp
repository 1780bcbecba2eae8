#pragma once

#include <array>
#include <map>
#include <string>

#include "weylcomb/poly.hpp"

namespace weylcomb {

/// Commutative polynomial in x, y and a central deformation parameter hbar with
/// rational coefficients. Keys are exponent triples (x, y, hbar).
class BiPoly {
 public:
  using Exponents = std::array<unsigned, 3>;

  BiPoly() = default;
  BiPoly(const Scalar& c);
  BiPoly(int c) : BiPoly(Scalar(c)) {}

  static BiPoly monomial(const Scalar& c, unsigned x, unsigned y, unsigned hbar = 0);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly hbar() { return monomial(1, 0, 0, 1); }
  /// p(x) lifted into the bivariate ring.
  static BiPoly from_x(const Poly& p);

  const std::map<Exponents, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(unsigned x, unsigned y, unsigned hbar = 0) const;
  int total_degree() const;

  void add_term(const Exponents& e, const mpq_class& c);

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const mpq_class& c);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(unsigned e) const;

  BiPoly d_dx() const;
  BiPoly d_dy() const;
  /// Coefficient of hbar^k, as a polynomial in x and y.
  BiPoly hbar_coeff(unsigned k) const;
  /// Substitutes a rational value for hbar.
  BiPoly set_hbar(const mpq_class& v) const;

  /// "hbar*x*y^2 + 1/2*x"; degree-descending in (hbar, y, x).
  std::string to_string() const;

 private:
  std::map<Exponents, mpq_class> terms_;
};

/// a * b = sum_n d_y^n(a) * (h(x) d_x)^n(b) * hbar^n / n!. The sum is finite on polynomials.
/// Throws std::domain_error if h has prime-field coefficients.
BiPoly star_product(const BiPoly& a, const BiPoly& b, const Poly& h);

/// {a, b} = d_y(a) h d_x(b) - d_y(b) h d_x(a), the hbar^1 part of a*b - b*a.
BiPoly semiclassical_bracket(const BiPoly& a, const BiPoly& b, const Poly& h);

}  // namespace weylcomb
