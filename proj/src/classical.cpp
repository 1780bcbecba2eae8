#include "weylcomb/classical.hpp"

#include <stdexcept>

#include "weylcomb/ore_algebra.hpp"
#include "weylcomb/universal.hpp"

namespace weylcomb {

ClassicalKind parse_classical_kind(const std::string& name) {
  if (name == "stirling1" || name == "stirling1_signless") return ClassicalKind::stirling1_signless;
  if (name == "stirling2") return ClassicalKind::stirling2;
  if (name == "bell") return ClassicalKind::bell;
  if (name == "eulerian") return ClassicalKind::eulerian;
  throw std::invalid_argument("unknown kind '" + name + "'");
}

namespace {

void check_range(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

// Fills the triangle T(n, k) = T(n-1, k-1) + w(n, k) T(n-1, k) up to row n.
template <class Weight>
mpz_class pascal_like(unsigned n, unsigned k, Weight w) {
  std::vector<mpz_class> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<mpz_class> next(r + 1, 0);
    for (unsigned j = 1; j <= r; ++j) {
      next[j] = row[j - 1];
      if (j < r) next[j] += w(r, j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

mpz_class stirling1_signless(unsigned n, unsigned k) {
  check_range(n, k);
  return pascal_like(n, k, [](unsigned r, unsigned) { return mpz_class(r - 1); });
}

mpz_class stirling2(unsigned n, unsigned k) {
  check_range(n, k);
  return pascal_like(n, k, [](unsigned, unsigned j) { return mpz_class(j); });
}

mpz_class bell(unsigned n) {
  // Each row starts with the last entry of the previous row.
  std::vector<mpz_class> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<mpz_class> next{row.back()};
    for (const mpz_class& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

mpz_class eulerian(unsigned n, unsigned k) {
  if (n == 0) {
    if (k > 1) throw std::out_of_range("eulerian(0, k) needs k <= 1");
    return k == 0 ? 1 : 0;
  }
  if (k < 1 || k > n) throw std::out_of_range("eulerian(n, k) needs 1 <= k <= n");
  std::vector<mpz_class> row{0, 1};  // A(1, 1) = 1
  for (unsigned r = 2; r <= n; ++r) {
    std::vector<mpz_class> next(r + 1, 0);
    for (unsigned j = 1; j <= r; ++j) {
      if (j < r) next[j] += j * row[j];
      next[j] += (r - j + 1) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

mpz_class classical_number(ClassicalKind kind, unsigned n, unsigned k) {
  switch (kind) {
    case ClassicalKind::stirling1_signless: return stirling1_signless(n, k);
    case ClassicalKind::stirling2: return stirling2(n, k);
    case ClassicalKind::bell: return bell(n);
    case ClassicalKind::eulerian: return eulerian(n, k);
  }
  throw std::logic_error("unknown classical kind");
}

mpz_class generalized_stirling(unsigned n, unsigned k, unsigned q, unsigned d, StirlingRoute route) {
  if (d == 0 || n == 0) throw std::domain_error("generalized Stirling numbers need n, d >= 1");
  if (k < d || k > n * d) throw std::domain_error("k must lie in [d, n d]");
  if (route == StirlingRoute::ctable) {
    mpz_class total = 0;
    const UniversalPoly u = universal_power(n, d);
    for (const auto& [m, c] : u.terms()) {
      if (m.t_power == k) total += c * falling_product(Scalar(q), m.partition()).to_integer();
    }
    return total;
  }
  if (q < d) throw std::domain_error("the Weyl route needs q >= d");
  const OreAlgebraSpec weyl = OreAlgebraSpec::weyl();
  const OreElement word = OreElement::x(weyl).pow(q) * OreElement::y(weyl).pow(d);
  return word.pow(n).coeff(n * (q - d) + k, k).to_integer();
}

std::vector<Scalar> ode_solve(const std::vector<Scalar>& y_coeffs, unsigned N) {
  std::map<unsigned, Scalar> values;
  for (unsigned i = 0; i < y_coeffs.size(); ++i) {
    if (!y_coeffs[i].is_rational()) throw std::domain_error("the ODE solver needs characteristic 0");
    values[i] = y_coeffs[i];
  }
  std::vector<Scalar> x;
  for (unsigned n = 1; n <= N; ++n) {
    x.push_back(n == 1 ? (values.count(0) ? values[0] : Scalar(0))
                       : specialize_power_map(universal_power(n - 1, 1), values));
  }
  return x;
}

std::vector<Scalar> ode_residual(const std::vector<Scalar>& y_coeffs, const std::vector<Scalar>& x) {
  const std::size_t N = x.size();
  // Ordinary power-series coefficients a_n = x_n / n!.
  std::vector<mpq_class> a(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) a[n] = x[n - 1].rational() / mpq_class(factorial(static_cast<unsigned>(n)));
  std::vector<mpq_class> composed(N, 0);
  std::vector<mpq_class> power(N, 0);  // X^i mod u^N
  power[0] = 1;
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) {
      std::vector<mpq_class> next(N, 0);
      for (std::size_t s = 0; s < N; ++s) {
        if (power[s] == 0) continue;
        for (std::size_t t = 1; s + t < N; ++t) next[s + t] += power[s] * a[t];
      }
      power = std::move(next);
    }
    const mpq_class yi = i < y_coeffs.size() ? y_coeffs[i].rational() : mpq_class(0);
    if (yi == 0) continue;
    const mpq_class scale = yi / mpq_class(factorial(static_cast<unsigned>(i)));
    for (std::size_t s = 0; s < N; ++s) composed[s] += scale * power[s];
  }
  std::vector<Scalar> residual;
  for (std::size_t j = 0; j < N; ++j) {
    const mpq_class derivative = (j + 1 <= N) ? mpq_class(static_cast<unsigned long>(j + 1)) * a[j + 1] : mpq_class(0);
    residual.emplace_back(mpq_class((derivative - composed[j]) * mpq_class(factorial(static_cast<unsigned>(j)))));
  }
  return residual;
}

}  // namespace weylcomb
