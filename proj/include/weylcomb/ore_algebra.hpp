#pragma once

#include <map>
#include <string>

#include "weylcomb/poly.hpp"
#include "weylcomb/scalar.hpp"

namespace weylcomb {

/// The algebra F<x,y>/(yx - q*xy - h(x)). Covers the quantum plane (h = 0),
/// the quantum Weyl algebra (h = 1, q != 1) and the family A_h (q = 1).
struct OreAlgebraSpec {
  Ring ring;
  Scalar q{1};
  Poly h;

  OreAlgebraSpec() = default;
  /// Coerces q and h into the ring.
  OreAlgebraSpec(Ring ring, Scalar q, Poly h);

  static OreAlgebraSpec weyl(Ring ring = Ring::rationals()) { return {ring, Scalar(1), Poly(1)}; }
  static OreAlgebraSpec a_h(Poly h, Ring ring = Ring::rationals()) { return {ring, Scalar(1), std::move(h)}; }
  static OreAlgebraSpec quantum_plane(Scalar q, Ring ring = Ring::rationals()) { return {ring, std::move(q), Poly()}; }
  static OreAlgebraSpec quantum_weyl(Scalar q, Ring ring = Ring::rationals()) { return {ring, std::move(q), Poly(1)}; }

  friend bool operator==(const OreAlgebraSpec& a, const OreAlgebraSpec& b) {
    return a.ring == b.ring && a.q == b.q && a.h == b.h;
  }
};

/// Element sum_j p_j(x) y^j in left PBW form. No zero polynomial is stored.
class OreElement {
 public:
  explicit OreElement(OreAlgebraSpec spec) : spec_(std::move(spec)) {}

  static OreElement constant(const OreAlgebraSpec& spec, const Scalar& c);
  static OreElement x(const OreAlgebraSpec& spec);
  static OreElement y(const OreAlgebraSpec& spec);
  /// p(x) * y^j.
  static OreElement term(const OreAlgebraSpec& spec, const Poly& p, unsigned j);

  const OreAlgebraSpec& spec() const { return spec_; }
  const std::map<unsigned, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient polynomial of y^j (zero if absent).
  Poly coeff(unsigned j) const;
  Scalar coeff(unsigned i, unsigned j) const { return coeff(j).coeff(i); }
  /// Highest y-exponent, -1 for zero.
  int y_degree() const;
  /// Total degree max(i + j), -1 for zero.
  int total_degree() const;

  void add_term(const Poly& p, unsigned j);

  OreElement operator-() const;
  OreElement& operator+=(const OreElement& o);
  OreElement& operator-=(const OreElement& o);
  OreElement& operator*=(const Scalar& s);
  friend OreElement operator+(OreElement a, const OreElement& b) { return a += b; }
  friend OreElement operator-(OreElement a, const OreElement& b) { return a -= b; }
  friend OreElement operator*(const OreElement& a, const OreElement& b);
  friend OreElement operator*(OreElement a, const Scalar& s) { return a *= s; }
  friend OreElement operator*(const Scalar& s, OreElement a) { return a *= s; }
  friend bool operator==(const OreElement& a, const OreElement& b);
  friend bool operator!=(const OreElement& a, const OreElement& b) { return !(a == b); }

  OreElement pow(unsigned e) const;

  /// Monomials c*x^i*y^j sorted by j descending, then i descending,
  /// e.g. "x^2*y^2 + 4*x*y + 2".
  std::string to_string() const;

 private:
  OreAlgebraSpec spec_;
  std::map<unsigned, Poly> terms_;

  void check_spec(const OreElement& o) const;
};

/// Product in PBW form via y*p(x) = sigma(p)*y + delta(p), where sigma(p)(x) = p(qx)
/// and delta(x^n) = [n]_q * h * x^(n-1).
OreElement multiply(const OreElement& a, const OreElement& b);
OreElement commutator(const OreElement& a, const OreElement& b);
bool is_central(const OreElement& a);

/// sigma(p)(x) = p(qx).
Poly ore_sigma(const OreAlgebraSpec& spec, const Poly& p);
/// The sigma-derivation with delta(x) = h, from the closed q-integer formula.
Poly ore_delta(const OreAlgebraSpec& spec, const Poly& p);

/// p(a), evaluated by Horner's rule inside the algebra.
OreElement evaluate(const Poly& p, const OreElement& a);

}  // namespace weylcomb
