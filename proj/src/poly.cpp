#include "weylcomb/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, unsigned degree) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(degree + 1, Scalar(0).in_ring(c.modulus()));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

std::uint32_t Poly::modulus() const {
  for (const auto& c : c_) {
    if (c.modulus() != 0) return c.modulus();
  }
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly r(Scalar(1)), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Scalar Poly::eval(const Scalar& v) const {
  Scalar r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(*it);
  return r;
}

Poly Poly::scale_variable(const Scalar& a) const {
  Poly r = *this;
  Scalar f(1);
  for (auto& c : r.c_) {
    c *= f;
    f *= a;
  }
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Poly Poly::in_ring(std::uint32_t p) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.in_ring(p);
  r.trim();
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = s == "1";
    if (i == 0) {
      os << s;
      continue;
    }
    if (!unit) os << s << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  std::vector<Scalar> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  const Scalar inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
    Scalar c = r.leading() * inv;
    q[shift] = c;
    r -= Poly::monomial(c, shift) * b;
  }
  return {Poly(std::move(q)), r};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Coefficients at indices k*p become the coefficients at k.
Poly pth_root(const Poly& f, std::uint32_t p) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  // In F_p the Frobenius is the identity on scalars.
  return Poly(std::move(v));
}

void squarefree_into(const Poly& f, unsigned scale, std::vector<std::pair<unsigned, Poly>>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.modulus();
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(i * scale, fac.monic());
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    if (p == 0) throw std::logic_error("squarefree decomposition did not terminate");
    squarefree_into(pth_root(c, p), scale * p, out);
  }
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return divmod(a * b, m).second; }

Poly powmod(Poly base, mpz_class e, const Poly& m) {
  Poly r = divmod(Poly(Scalar(1)).in_ring(m.modulus()), m).second;
  base = divmod(base, m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return r;
}

// Splits a squarefree monic f whose irreducible factors all have degree d.
void equal_degree_split(const Poly& f, unsigned d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint32_t p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  for (;;) {
    std::vector<Scalar> v;
    for (int i = 0; i < f.degree(); ++i) v.push_back(Scalar::mod(static_cast<long long>(coin(rng)), p));
    Poly a(std::move(v));
    if (a.degree() <= 0) continue;
    Poly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_div(f, g), d, rng, out);
      return;
    }
    Poly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = a;
      b = a;
      for (unsigned j = 1; j < d; ++j) {
        t = mulmod(t, t, f);
        b += t;
      }
    } else {
      b = powmod(a, (pd - 1) / 2, f) - Poly(Scalar::mod(1, p));
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<unsigned, Poly>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<unsigned, Poly>> raw;
  squarefree_into(f.monic(), 1, raw);
  // Merge equal multiplicities coming from different p-th root levels.
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<unsigned, Poly>> out;
  for (auto& [m, g] : raw) {
    if (!out.empty() && out.back().first == m) {
      out.back().second = out.back().second * g;
    } else {
      out.emplace_back(m, g);
    }
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> factor_fp(const Poly& f) {
  const std::uint32_t p = f.modulus();
  if (p == 0) throw std::domain_error("factor_fp requires prime-field coefficients");
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  std::mt19937_64 rng(0x5eed);
  const Poly x = Poly::variable().in_ring(p);
  for (const auto& [mult, sq] : squarefree_decomposition(f)) {
    Poly rest = sq;
    Poly h = divmod(x, rest).second;
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
      h = powmod(h, mpz_class(p), rest);
      Poly g = gcd(h - x, rest);
      if (g.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree_split(g, d, rng, parts);
        for (auto& part : parts) out.emplace_back(std::move(part), mult);
        rest = exact_div(rest, g);
        h = divmod(h, rest).second;
      }
    }
    if (rest.degree() > 0) out.emplace_back(rest.monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Scalar ca = a.coeff(static_cast<std::size_t>(i));
    const Scalar cb = b.coeff(static_cast<std::size_t>(i));
    if (ca == cb) continue;
    if (ca.modulus() != 0 || cb.modulus() != 0) {
      return ca.in_ring(std::max(ca.modulus(), cb.modulus())).residue() <
             cb.in_ring(std::max(ca.modulus(), cb.modulus())).residue();
    }
    return ca.rational() < cb.rational();
  }
  return false;
}

}  // namespace weylcomb
