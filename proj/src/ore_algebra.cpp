#include "weylcomb/ore_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

OreAlgebraSpec::OreAlgebraSpec(Ring r, Scalar q_, Poly h_)
    : ring(r), q(r.coerce(q_)), h(h_.in_ring(r.p)) {}

OreElement OreElement::constant(const OreAlgebraSpec& spec, const Scalar& c) {
  return term(spec, Poly(c), 0);
}

OreElement OreElement::x(const OreAlgebraSpec& spec) { return term(spec, Poly::variable(), 0); }

OreElement OreElement::y(const OreAlgebraSpec& spec) { return term(spec, Poly(1), 1); }

OreElement OreElement::term(const OreAlgebraSpec& spec, const Poly& p, unsigned j) {
  OreElement e(spec);
  e.add_term(p, j);
  return e;
}

Poly OreElement::coeff(unsigned j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Poly() : it->second;
}

int OreElement::y_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

int OreElement::total_degree() const {
  int d = -1;
  for (const auto& [j, p] : terms_) d = std::max(d, p.degree() + static_cast<int>(j));
  return d;
}

void OreElement::add_term(const Poly& p, unsigned j) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(j);
  it->second += p.in_ring(spec_.ring.p);
  if (it->second.is_zero()) terms_.erase(it);
}

void OreElement::check_spec(const OreElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("Ore elements belong to different algebras");
}

OreElement OreElement::operator-() const {
  OreElement r = *this;
  for (auto& [j, p] : r.terms_) p = -p;
  return r;
}

OreElement& OreElement::operator+=(const OreElement& o) {
  check_spec(o);
  for (const auto& [j, p] : o.terms_) add_term(p, j);
  return *this;
}

OreElement& OreElement::operator-=(const OreElement& o) {
  check_spec(o);
  for (const auto& [j, p] : o.terms_) add_term(-p, j);
  return *this;
}

OreElement& OreElement::operator*=(const Scalar& s) {
  const Scalar c = spec_.ring.coerce(s);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const OreElement& a, const OreElement& b) {
  a.check_spec(b);
  return a.terms_ == b.terms_;
}

OreElement operator*(const OreElement& a, const OreElement& b) { return multiply(a, b); }

OreElement OreElement::pow(unsigned e) const {
  OreElement r = constant(spec_, Scalar(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string OreElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto jt = terms_.rbegin(); jt != terms_.rend(); ++jt) {
    const unsigned j = jt->first;
    const Poly& p = jt->second;
    for (int i = p.degree(); i >= 0; --i) {
      const Scalar& c = p.coeffs()[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string s = c.to_string();
      const bool negative = s[0] == '-';
      if (negative) s.erase(0, 1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      if (s != "1" || (i == 0 && j == 0)) factors.push_back(s);
      if (i > 0) factors.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
      if (j > 0) factors.push_back(j == 1 ? "y" : "y^" + std::to_string(j));
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
  }
  return os.str();
}

Poly ore_sigma(const OreAlgebraSpec& spec, const Poly& p) { return p.scale_variable(spec.q); }

Poly ore_delta(const OreAlgebraSpec& spec, const Poly& p) {
  // delta(x^n) = [n]_q h x^(n-1), [n]_q = 1 + q + ... + q^(n-1).
  std::vector<Scalar> v(p.coeffs().size());
  Scalar qint(0), qpow(1);
  for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
    qint += qpow;
    qpow *= spec.q;
    v[n - 1] = p.coeffs()[n] * qint;
  }
  return Poly(std::move(v)) * spec.h;
}

namespace {

OreElement left_multiply_y(const OreElement& b) {
  OreElement r(b.spec());
  for (const auto& [j, p] : b.terms()) {
    r.add_term(ore_sigma(b.spec(), p), j + 1);
    r.add_term(ore_delta(b.spec(), p), j);
  }
  return r;
}

}  // namespace

OreElement multiply(const OreElement& a, const OreElement& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("Ore elements belong to different algebras");
  OreElement result(a.spec());
  if (a.is_zero() || b.is_zero()) return result;
  // y^i * b for increasing i, then scale by the left coefficient p_i(x).
  OreElement yb = b;
  unsigned i = 0;
  for (const auto& [j, p] : a.terms()) {
    while (i < j) {
      yb = left_multiply_y(yb);
      ++i;
    }
    for (const auto& [k, r] : yb.terms()) result.add_term(p * r, k);
  }
  return result;
}

OreElement commutator(const OreElement& a, const OreElement& b) { return a * b - b * a; }

bool is_central(const OreElement& a) {
  return commutator(a, OreElement::x(a.spec())).is_zero() &&
         commutator(a, OreElement::y(a.spec())).is_zero();
}

OreElement evaluate(const Poly& p, const OreElement& a) {
  OreElement r(a.spec());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * a + OreElement::constant(a.spec(), p.coeffs()[static_cast<std::size_t>(i)]);
  }
  return r;
}

}  // namespace weylcomb
