#pragma once

#include <string>
#include <vector>

#include "weylcomb/scalar.hpp"

namespace weylcomb {

enum class ClassicalKind { stirling1_signless, stirling2, bell, eulerian };

/// Parses "stirling1", "stirling1_signless", "stirling2", "bell" or "eulerian".
ClassicalKind parse_classical_kind(const std::string& name);

/// Values from the standard recurrences; no universal-polynomial data is used.
/// bell ignores k. Throws std::out_of_range unless 0 <= k <= n (eulerian: k >= 1 for n >= 1).
mpz_class classical_number(ClassicalKind kind, unsigned n, unsigned k = 0);
mpz_class stirling1_signless(unsigned n, unsigned k);
mpz_class stirling2(unsigned n, unsigned k);
/// B_n from the Bell triangle.
mpz_class bell(unsigned n);
/// A(n, k): permutations of n with k - 1 descents (k = 1..n).
mpz_class eulerian(unsigned n, unsigned k);

enum class StirlingRoute { ctable, weyl };

/// {n k}_{q,d}: the coefficient of x^{n(q-d)} x^k d^k in the normal ordering of (x^q d^d)^n,
/// either from the c^{n,d} table weighted by falling factorials or by normal ordering in
/// the Weyl algebra. Throws std::domain_error on d == 0, on k outside [d, n d] and, for the
/// Weyl route, on q < d.
mpz_class generalized_stirling(unsigned n, unsigned k, unsigned q, unsigned d, StirlingRoute route);

/// Coefficients x_1..x_N of the formal solution X(u) = sum x_n u^n/n! of X' = Y(X),
/// where Y(z) = sum y_i z^i/i!. Indices beyond y_coeffs count as 0.
/// Throws std::domain_error for prime-field input.
std::vector<Scalar> ode_solve(const std::vector<Scalar>& y_coeffs, unsigned N);

/// Coefficients of u^0..u^{N-1} (in the u^j/j! normalization) of X' - Y(X),
/// from truncated series composition.
std::vector<Scalar> ode_residual(const std::vector<Scalar>& y_coeffs, const std::vector<Scalar>& x);

}  // namespace weylcomb
