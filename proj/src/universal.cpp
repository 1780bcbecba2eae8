#include "weylcomb/universal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace weylcomb {

unsigned DiffMonomial::y_degree() const {
  unsigned d = 0;
  for (const auto& [j, e] : y_exponents) d += e;
  return d;
}

unsigned DiffMonomial::exponent(unsigned j) const {
  auto it = y_exponents.find(j);
  return it == y_exponents.end() ? 0 : it->second;
}

Partition DiffMonomial::partition() const {
  std::vector<unsigned> parts;
  for (const auto& [j, e] : y_exponents) {
    if (j > 0) parts.insert(parts.end(), e, j);
  }
  return Partition(std::move(parts));
}

std::string DiffMonomial::to_string() const {
  std::vector<std::string> factors;
  for (const auto& [j, e] : y_exponents) {
    factors.push_back("y" + std::to_string(j) + (e > 1 ? "^" + std::to_string(e) : ""));
  }
  if (t_power == 1) factors.emplace_back("t");
  if (t_power > 1) factors.push_back("t^" + std::to_string(t_power));
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
  return s;
}

void UniversalPoly::add_term(const DiffMonomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpz_class UniversalPoly::coeff(const DiffMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::string UniversalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<DiffMonomial, mpz_class>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.first.t_power > b.first.t_power; });
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& [m, c] = v[i];
    if (i) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpz_class a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << m.to_string();
  }
  return os.str();
}

DiffMonomial shaped_monomial(unsigned n, const Partition& lambda, unsigned k) {
  DiffMonomial m;
  if (n > lambda.length()) m.y_exponents[0] = n - lambda.length();
  for (unsigned part : lambda.parts()) ++m.y_exponents[part];
  m.t_power = k;
  return m;
}

UniversalPoly universal_power(unsigned n, unsigned d) {
  UniversalPoly u;
  if (n == 0) {
    u.add_term({}, 1);
    return u;
  }
  DiffMonomial first;
  first.y_exponents[0] = 1;
  first.t_power = d;
  u.add_term(first, 1);
  // Binomial rows are reused across all monomials sharing a t-power.
  std::vector<std::vector<mpz_class>> binom;
  for (unsigned step = 1; step < n; ++step) {
    UniversalPoly next;
    for (const auto& [m, c] : u.terms()) {
      const unsigned k = m.t_power;
      while (binom.size() <= k) {
        const unsigned r = static_cast<unsigned>(binom.size());
        std::vector<mpz_class> row(r + 1);
        for (unsigned j = 0; j <= r; ++j) row[j] = binomial(r, j);
        binom.push_back(std::move(row));
      }
      // (Y t^k) * y_0 t^d = sum_j C(k, j) Y y_j t^{k - j + d}.
      for (unsigned j = 0; j <= k; ++j) {
        DiffMonomial r = m;
        ++r.y_exponents[j];
        r.t_power = k - j + d;
        next.add_term(r, c * binom[k][j]);
      }
    }
    u = std::move(next);
  }
  return u;
}

std::optional<std::string> shape_violation(const UniversalPoly& u, unsigned n, unsigned d) {
  for (const auto& [m, c] : u.terms()) {
    const Partition lambda = m.partition();
    const std::string where = "monomial " + m.to_string();
    if (c <= 0) return where + " has a non-positive coefficient";
    if (lambda.size() + m.t_power != n * d) return where + " violates |lambda| + k = n d";
    if (lambda.length() + 1 > n) return where + " has l(lambda) > n - 1";
    if (m.exponent(0) != n - lambda.length()) return where + " has y_0 exponent != n - l(lambda)";
  }
  return std::nullopt;
}

namespace {

struct ExponentHash {
  std::size_t operator()(const std::vector<unsigned char>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned char c : v) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

}  // namespace

UniversalPoly umbral_expand(unsigned n) {
  // Exponent vectors over x_0..x_{n-1}; slot 0 is x_0.
  std::unordered_map<std::vector<unsigned char>, mpz_class, ExponentHash> cur;
  cur.emplace(std::vector<unsigned char>(n, 0), 1);
  for (unsigned i = 0; i < n; ++i) {
    std::unordered_map<std::vector<unsigned char>, mpz_class, ExponentHash> next;
    for (const auto& [e, c] : cur) {
      for (unsigned j = 0; j <= i; ++j) {
        auto f = e;
        ++f[j];
        next[f] += c;
      }
    }
    cur = std::move(next);
  }
  UniversalPoly u;
  for (const auto& [e, c] : cur) {
    DiffMonomial m;
    m.t_power = e[0];
    for (unsigned j = 1; j <= n; ++j) ++m.y_exponents[j < n ? e[j] : 0];
    u.add_term(m, c);
  }
  return u;
}

namespace {

Scalar lookup(const std::map<unsigned, Scalar>& values, unsigned j) {
  auto it = values.find(j);
  return it == values.end() ? Scalar(0) : it->second;
}

Scalar y_part(const DiffMonomial& m, const std::map<unsigned, Scalar>& values) {
  Scalar v(1);
  for (const auto& [j, e] : m.y_exponents) v *= lookup(values, j).pow(e);
  return v;
}

}  // namespace

Scalar specialize_value(const UniversalPoly& u, const std::map<unsigned, Scalar>& values,
                        const Scalar& t_value) {
  Scalar total(0);
  for (const auto& [m, c] : u.terms()) total += Scalar(c) * y_part(m, values) * t_value.pow(m.t_power);
  return total;
}

Scalar specialize_power_map(const UniversalPoly& u, const std::map<unsigned, Scalar>& values) {
  Scalar total(0);
  for (const auto& [m, c] : u.terms()) total += Scalar(c) * y_part(m, values) * lookup(values, m.t_power);
  return total;
}

std::map<unsigned, Poly> specialize_operator(const UniversalPoly& u,
                                             const std::map<unsigned, Poly>& values) {
  std::map<unsigned, Poly> out;
  for (const auto& [m, c] : u.terms()) {
    Poly p{Scalar(c)};
    for (const auto& [j, e] : m.y_exponents) {
      auto it = values.find(j);
      p *= it == values.end() ? Poly() : it->second.pow(e);
    }
    if (p.is_zero()) continue;
    out[m.t_power] += p;
    if (out[m.t_power].is_zero()) out.erase(m.t_power);
  }
  return out;
}

}  // namespace weylcomb
