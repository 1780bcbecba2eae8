#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylcomb/partition.hpp"
#include "weylcomb/poly.hpp"

namespace weylcomb {

/// y_0^{a_0} y_1^{a_1} ... t^k with commuting y_i and t kept to the right.
struct DiffMonomial {
  std::map<unsigned, unsigned> y_exponents;  // index -> positive exponent
  unsigned t_power = 0;

  unsigned y_degree() const;
  unsigned exponent(unsigned j) const;
  /// The partition with a part j for every factor y_j, j >= 1.
  Partition partition() const;
  std::string to_string() const;

  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
  friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;
};

/// Integer linear combination of DiffMonomials; zero coefficients are never stored.
class UniversalPoly {
 public:
  const std::map<DiffMonomial, mpz_class>& terms() const { return terms_; }
  void add_term(const DiffMonomial& m, const mpz_class& c);
  mpz_class coeff(const DiffMonomial& m) const;
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const UniversalPoly&, const UniversalPoly&) = default;

  /// "y0^2*t^2 + y0*y1*t", ordered by t-power descending.
  std::string to_string() const;

 private:
  std::map<DiffMonomial, mpz_class> terms_;
};

/// The monomial y_0^{n - l(lambda)} y_lambda t^k.
DiffMonomial shaped_monomial(unsigned n, const Partition& lambda, unsigned k);

/// (y_0 t^d)^n, expanded with t^k y_m = sum_j C(k, j) y_{m+j} t^{k-j}.
UniversalPoly universal_power(unsigned n, unsigned d);

/// Checks that every monomial is y_0^{n - l(lambda)} y_lambda t^k with
/// |lambda| + k = n d and l(lambda) <= n - 1; returns a description of the first violation.
std::optional<std::string> shape_violation(const UniversalPoly& u, unsigned n, unsigned d);

/// U_n from the product over i < n of (x_i + ... + x_0): the exponent a_j of x_j
/// (slots j = 1..n) becomes a factor y_{a_j}, the exponent of x_0 becomes t^k.
UniversalPoly umbral_expand(unsigned n);

/// Substitutes y_i -> values[i] (missing indices are 0) and t -> t_value.
Scalar specialize_value(const UniversalPoly& u, const std::map<unsigned, Scalar>& values,
                        const Scalar& t_value);
/// Substitutes y_i -> values[i] and each t^k -> values[k].
Scalar specialize_power_map(const UniversalPoly& u, const std::map<unsigned, Scalar>& values);
/// Substitutes y_i -> values[i] and keeps t formal on the right: returns k -> P_k.
std::map<unsigned, Poly> specialize_operator(const UniversalPoly& u,
                                             const std::map<unsigned, Poly>& values);

}  // namespace weylcomb
