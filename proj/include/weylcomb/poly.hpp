#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weylcomb/scalar.hpp"

namespace weylcomb {

/// Dense univariate polynomial with exact scalar coefficients.
/// Coefficient i multiplies var^i; trailing zeros are always stripped, so the
/// zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);
  Poly(int c) : Poly(Scalar(c)) {}
  Poly(std::initializer_list<Scalar> coeffs);
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly monomial(const Scalar& c, unsigned degree);
  static Poly variable() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Characteristic of the coefficients (0 when all are rational, including the zero polynomial).
  std::uint32_t modulus() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Scalar eval(const Scalar& v) const;
  /// this(inner(var)).
  Poly compose(const Poly& inner) const;
  /// this(a * var).
  Poly scale_variable(const Scalar& a) const;
  Poly derivative() const;
  Poly monic() const;
  Poly in_ring(std::uint32_t p) const;

  /// "x^2 - 2*x + 2"; var is the printed variable name.
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Squarefree decomposition: pairs (multiplicity i, monic squarefree product of
/// the factors of f occurring with multiplicity exactly i), ascending in i.
/// Works in characteristic 0 and p (with p-th root extraction).
std::vector<std::pair<unsigned, Poly>> squarefree_decomposition(const Poly& f);

/// Complete factorization of f over F_p into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Distinct-degree then equal-degree splitting.
std::vector<std::pair<Poly, unsigned>> factor_fp(const Poly& f);

/// Total order used for canonical sorting: degree, then coefficients from the top.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace weylcomb
