#include "weylcomb/star.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace weylcomb {

BiPoly::BiPoly(const Scalar& c) { add_term({0, 0, 0}, c.rational()); }

BiPoly BiPoly::monomial(const Scalar& c, unsigned x, unsigned y, unsigned hbar) {
  BiPoly r;
  r.add_term({x, y, hbar}, c.rational());
  return r;
}

BiPoly BiPoly::from_x(const Poly& p) {
  if (p.modulus() != 0) throw std::domain_error("star product needs characteristic 0");
  BiPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    r.add_term({static_cast<unsigned>(i), 0, 0}, p.coeffs()[i].rational());
  }
  return r;
}

mpq_class BiPoly::coeff(unsigned x, unsigned y, unsigned hbar) const {
  auto it = terms_.find({x, y, hbar});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1]));
  return d;
}

void BiPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

BiPoly operator*(BiPoly a, const mpq_class& c) {
  if (c == 0) return {};
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiPoly BiPoly::d_dx() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[0] > 0) r.add_term({e[0] - 1, e[1], e[2]}, c * e[0]);
  }
  return r;
}

BiPoly BiPoly::d_dy() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[1] > 0) r.add_term({e[0], e[1] - 1, e[2]}, c * e[1]);
  }
  return r;
}

BiPoly BiPoly::hbar_coeff(unsigned k) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[2] == k) r.add_term({e[0], e[1], 0}, c);
  }
  return r;
}

BiPoly BiPoly::set_hbar(const mpq_class& v) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    mpq_class w = c;
    for (unsigned i = 0; i < e[2]; ++i) w *= v;
    r.add_term({e[0], e[1], 0}, w);
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, mpq_class>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const auto& [ea, ca] = a;
    const auto& [eb, cb] = b;
    return std::tie(ea[2], ea[1], ea[0]) > std::tie(eb[2], eb[1], eb[0]);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : v) {
    const bool negative = c < 0;
    const mpq_class a = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (a != 1 || (e[0] == 0 && e[1] == 0 && e[2] == 0)) factors.push_back(a.get_str());
    auto power = [&](const char* name, unsigned k) {
      if (k == 1) factors.emplace_back(name);
      if (k > 1) factors.push_back(std::string(name) + "^" + std::to_string(k));
    };
    power("hbar", e[2]);
    power("x", e[0]);
    power("y", e[1]);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

BiPoly star_product(const BiPoly& a, const BiPoly& b, const Poly& h) {
  const BiPoly hx = BiPoly::from_x(h);
  BiPoly result;
  BiPoly da = a;
  BiPoly db = b;
  mpq_class scale = 1;
  for (unsigned n = 0; !da.is_zero() && !db.is_zero(); ++n) {
    if (n > 0) scale /= n;
    result += da * db * BiPoly::monomial(1, 0, 0, n) * scale;
    da = da.d_dy();
    db = hx * db.d_dx();
  }
  return result;
}

BiPoly semiclassical_bracket(const BiPoly& a, const BiPoly& b, const Poly& h) {
  const BiPoly hx = BiPoly::from_x(h);
  return a.d_dy() * hx * b.d_dx() - b.d_dy() * hx * a.d_dx();
}

}  // namespace weylcomb
