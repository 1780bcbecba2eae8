#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylcomb/poly.hpp"

namespace weylcomb {

/// H_q(f, g): generators x, y, h with hx = x f(h), yh = f(h) y, yx - q xy = g(h).
struct QghaSpec {
  Ring ring;
  Scalar q{1};
  Poly f;
  Poly g;

  QghaSpec() = default;
  /// Coerces q, f and g into the ring; throws std::domain_error when q == 0.
  QghaSpec(Ring ring, Scalar q, Poly f, Poly g);

  friend bool operator==(const QghaSpec& a, const QghaSpec& b) {
    return a.ring == b.ring && a.q == b.q && a.f == b.f && a.g == b.g;
  }
};

/// sum x^i p_{i,k}(h) y^k in PBW form; keys are (i, k). No zero polynomial is stored.
class QghaElement {
 public:
  explicit QghaElement(QghaSpec spec) : spec_(std::move(spec)) {}

  static QghaElement constant(const QghaSpec& spec, const Scalar& c);
  /// One of 'x', 'y', 'h'.
  static QghaElement generator(const QghaSpec& spec, char name);
  static QghaElement term(const QghaSpec& spec, unsigned i, const Poly& p, unsigned k);

  const QghaSpec& spec() const { return spec_; }
  const std::map<std::pair<unsigned, unsigned>, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(unsigned i, unsigned k) const;

  void add_term(unsigned i, const Poly& p, unsigned k);

  QghaElement& operator+=(const QghaElement& o);
  QghaElement& operator-=(const QghaElement& o);
  QghaElement& operator*=(const Scalar& s);
  friend QghaElement operator+(QghaElement a, const QghaElement& b) { return a += b; }
  friend QghaElement operator-(QghaElement a, const QghaElement& b) { return a -= b; }
  friend QghaElement operator*(const QghaElement& a, const QghaElement& b);
  friend QghaElement operator*(QghaElement a, const Scalar& s) { return a *= s; }
  friend QghaElement operator*(const Scalar& s, QghaElement a) { return a *= s; }
  friend bool operator==(const QghaElement& a, const QghaElement& b);
  friend bool operator!=(const QghaElement& a, const QghaElement& b) { return !(a == b); }

  QghaElement operator-() const;
  QghaElement pow(unsigned e) const;

  /// Monomials c*x^i*h^j*y^k ordered by k, then i, then j, all descending.
  std::string to_string() const;

 private:
  QghaSpec spec_;
  std::map<std::pair<unsigned, unsigned>, Poly> terms_;
};

/// f composed with itself n times (f^{o0} = h).
Poly iterate(const Poly& f, unsigned n);

/// Product of the generators in `word` (letters x, y, h), in PBW form.
/// Throws std::invalid_argument on any other letter.
QghaElement normal_order_qgha(const std::string& word, const QghaSpec& spec);

enum class RewriteStrategy { leftmost, rightmost };

/// Independent oracle: rewrites a linear combination of words with hx -> x f(h),
/// yh -> f(h) y, yx -> q xy + g(h), always at the leftmost (or rightmost) inversion,
/// until every word is of the form x^i h^j y^k.
QghaElement rewrite_normal_form(const std::string& word, const QghaSpec& spec,
                                RewriteStrategy strategy = RewriteStrategy::leftmost);

/// lambda(0..m-1) with f(lambda(i)) = lambda(i+1 mod m) and m minimal.
struct WeightCycle {
  std::vector<Scalar> values;
  unsigned period() const { return static_cast<unsigned>(values.size()); }
  const Scalar& at(long long i) const;
  friend bool operator==(const WeightCycle&, const WeightCycle&) = default;
  std::string to_string() const;
};

/// Every cycle of a -> f(a) on F_p with period <= max_period, starting at its minimal
/// element, sorted by that element. Throws std::domain_error when p >= 2^20.
std::vector<WeightCycle> find_cycles(const Poly& f, std::uint32_t p, unsigned max_period);

/// The cycle through lambda0, checking periodicity within max_period steps.
/// Throws std::domain_error when lambda0 is not periodic under f.
WeightCycle cycle_from(const Poly& f, const Scalar& lambda0, unsigned max_period);

/// mu(i+1) = q mu(i) + g(lambda(i)) over one full window of length |lambda| |mu|.
struct MuData {
  WeightCycle cycle;
  Scalar mu0;
  std::vector<Scalar> values;
  unsigned mu_period = 0;
  unsigned dimension() const { return cycle.period() * mu_period; }
  /// mu(i) for any integer i, using the periodicity of the window.
  const Scalar& at(long long i) const;
  bool has_zero() const;
};

/// Throws std::domain_error when mu does not return to mu0 within max_mu_period cycle lengths.
MuData mu_data(const WeightCycle& cycle, const Scalar& q, const Poly& g, const Scalar& mu0,
               unsigned max_mu_period = 4096);

}  // namespace weylcomb
