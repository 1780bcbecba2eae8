#include "weylcomb/qgha_modules.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

Matrix::Matrix(std::size_t n, const Scalar& zero) : n_(n), a_(n * n, zero) {}

Matrix Matrix::identity(std::size_t n, const Ring& ring) {
  Matrix m(n, ring(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_.at(i);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_.at(i);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const Scalar zero = a.n_ ? a.a_[0] * Scalar(0) : Scalar(0);
  Matrix r(a.n_, zero);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Scalar& v = a(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += v * b(k, j);
    }
  }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& v : r.a_) v *= s;
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < n_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < n_; ++c) os << (c ? " " : "") << (*this)(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  const Scalar zero = m.size() ? m(0, 0) * Scalar(0) : Scalar(0);
  Matrix r(m.size(), zero);
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(i)];
    for (std::size_t d = 0; d < m.size(); ++d) r(d, d) += c;
  }
  return r;
}

char family_tag(ModuleFamily f) {
  switch (f) {
    case ModuleFamily::a: return 'a';
    case ModuleFamily::b: return 'b';
    case ModuleFamily::c: return 'c';
  }
  return '?';
}

namespace {

nlohmann::ordered_json scalar_json(const Scalar& s) {
  if (s.is_rational()) return s.to_string();
  return s.residue();
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(scalar_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json scalars_json(const std::vector<Scalar>& v) {
  auto a = nlohmann::ordered_json::array();
  for (const Scalar& s : v) a.push_back(scalar_json(s));
  return a;
}

}  // namespace

std::string MatrixModule::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = spec.ring.p;
  j["q"] = scalar_json(spec.q);
  j["f"] = spec.f.to_string("h");
  j["g"] = spec.g.to_string("h");
  j["dimension"] = dimension();
  j["family"] = std::string(1, family_tag(family));
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  if (mu) {
    prov["cycle"] = scalars_json(mu->cycle.values);
    prov["mu0"] = scalar_json(mu->mu0);
    prov["mu"] = scalars_json(mu->values);
    prov["mu_period"] = mu->mu_period;
    prov["gamma"] = scalar_json(gamma);
  } else if (family == ModuleFamily::c && !nu.empty()) {
    prov["alpha"] = scalar_json(alpha);
    prov["nu"] = scalars_json(nu);
  }
  j["provenance"] = prov;
  j["X"] = matrix_json(X);
  j["Y"] = matrix_json(Y);
  j["H"] = matrix_json(H);
  return j.dump();
}

MatrixModule build_module(ModuleFamily family, const QghaSpec& spec, const ModuleParams& params) {
  const Ring& ring = spec.ring;
  MatrixModule m;
  m.spec = spec;
  m.family = family;
  if (family == ModuleFamily::c) {
    const Scalar alpha = ring.coerce(params.alpha);
    std::vector<Scalar> lambda{alpha};
    std::vector<Scalar> nu{ring(0)};
    while (true) {
      const Scalar next = spec.q * nu.back() + spec.g.eval(lambda.back());
      nu.push_back(next);
      if (next.is_zero()) break;
      if (nu.size() > params.max_dimension) {
        throw std::domain_error("nu sequence for alpha = " + alpha.to_string() + " does not vanish within " +
                                std::to_string(params.max_dimension) + " steps");
      }
      lambda.push_back(spec.f.eval(lambda.back()));
    }
    const std::size_t n = lambda.size();
    m.X = m.Y = m.H = Matrix(n, ring(0));
    for (std::size_t i = 0; i < n; ++i) {
      m.H(i, i) = lambda[i];
      if (i + 1 < n) m.X(i + 1, i) = ring(1);
      if (i > 0) m.Y(i - 1, i) = nu[i];
    }
    m.alpha = alpha;
    m.nu = std::move(nu);
    return m;
  }
  if (!params.mu) throw std::domain_error("families a and b need mu data");
  const MuData& mu = *params.mu;
  const Scalar gamma = ring.coerce(params.gamma);
  if (gamma.is_zero()) throw std::domain_error("gamma must be nonzero");
  const std::size_t N = mu.dimension();
  if (N == 0 || mu.values.size() != N) throw std::domain_error("mu window does not match |lambda| |mu|");
  for (unsigned i = 0; i < mu.cycle.period(); ++i) {
    if (spec.f.eval(mu.cycle.values[i]) != mu.cycle.at(i + 1)) throw std::domain_error("lambda is not an f-cycle");
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (spec.q * mu.at(static_cast<long long>(i)) + spec.g.eval(mu.cycle.at(static_cast<long long>(i))) !=
        mu.at(static_cast<long long>(i) + 1)) {
      throw std::domain_error("mu does not satisfy mu(i+1) = q mu(i) + g(lambda(i))");
    }
  }
  if (family == ModuleFamily::b && !mu.has_zero()) throw std::domain_error("family b needs some mu(i) = 0");
  m.X = m.Y = m.H = Matrix(N, ring(0));
  for (std::size_t i = 0; i < N; ++i) m.H(i, i) = mu.cycle.at(static_cast<long long>(i));
  const Scalar ginv = gamma.inverse();
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t up = (i + 1) % N;
    const std::size_t down = (i + N - 1) % N;
    const bool wrap_up = i + 1 == N;
    const bool wrap_down = i == 0;
    if (family == ModuleFamily::a) {
      m.X(up, i) += wrap_up ? gamma : ring(1);
      m.Y(down, i) += wrap_down ? ginv * mu.at(0) : mu.at(static_cast<long long>(i));
    } else {
      m.X(up, i) += wrap_up ? gamma * mu.at(0) : mu.at(static_cast<long long>(i) + 1);
      m.Y(down, i) += wrap_down ? ginv : ring(1);
    }
  }
  m.mu = mu;
  m.gamma = gamma;
  return m;
}

Residuals verify_module(const MatrixModule& m) {
  const Matrix fH = evaluate(m.spec.f, m.H);
  return {m.H * m.X - m.X * fH, m.Y * m.H - fH * m.Y,
          m.Y * m.X - m.spec.q * (m.X * m.Y) - evaluate(m.spec.g, m.H)};
}

namespace {

using Vec = std::vector<std::uint64_t>;
using FpMat = std::vector<Vec>;  // rows

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

FpMat to_fp(const Matrix& m) {
  FpMat r(m.size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m(i, j).residue();
  }
  return r;
}

Vec apply(const FpMat& a, const Vec& v, std::uint64_t p) {
  Vec r(v.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s = (s + a[i][j] * v[j]) % p;
    r[i] = s;
  }
  return r;
}

// Incremental row-echelon basis with normalized pivots.
class Echelon {
 public:
  explicit Echelon(std::uint64_t p) : p_(p) {}
  // Returns true when v was independent (and adds its reduction).
  bool insert(Vec v, Vec* reduced = nullptr) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const std::uint64_t c = v[pivots_[b]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p_ - c) * rows_[b][j]) % p_;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t inv = invmod(v[pivot], p_);
    for (auto& x : v) x = x * inv % p_;
    // Keep earlier rows reduced at the new pivot.
    for (auto& row : rows_) {
      const std::uint64_t c = row[pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = (row[j] + (p_ - c) * v[j]) % p_;
    }
    if (reduced) *reduced = v;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::uint64_t p_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Dimension of the submodule generated by v.
std::size_t generated_dimension(const std::vector<FpMat>& gens, const Vec& v, std::uint64_t p) {
  Echelon basis(p);
  std::vector<Vec> queue{v};
  basis.insert(v);
  const std::size_t n = v.size();
  for (std::size_t head = 0; head < queue.size() && basis.rank() < n; ++head) {
    for (const FpMat& g : gens) {
      Vec w = apply(g, queue[head], p);
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  return basis.rank();
}

std::uint64_t projective_count(std::uint64_t p, std::size_t dim, std::uint64_t cap) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += pw;  // vectors whose leading 1 sits at coordinate i from the end
    if (total > cap) return cap + 1;
    if (pw > cap / p + 1) pw = cap + 1;
    else pw *= p;
  }
  return total;
}

// Calls visit on every vector of the span of `coords` whose first nonzero coefficient is 1;
// stops early when visit returns false.
template <class Visit>
bool for_each_projective(const std::vector<std::size_t>& coords, std::size_t n, std::uint64_t p, Visit visit) {
  const std::size_t s = coords.size();
  for (std::size_t lead = 0; lead < s; ++lead) {
    const std::size_t free = s - lead - 1;
    std::vector<std::uint64_t> digits(free, 0);
    while (true) {
      Vec v(n, 0);
      v[coords[lead]] = 1;
      for (std::size_t t = 0; t < free; ++t) v[coords[lead + 1 + t]] = digits[t];
      if (!visit(v)) return false;
      std::size_t t = 0;
      while (t < free && ++digits[t] == p) digits[t++] = 0;
      if (t == free) break;
    }
  }
  return true;
}

void require_prime_field(const QghaSpec& spec) {
  if (!spec.ring.is_prime_field()) throw std::domain_error("module tests need a prime field");
}

}  // namespace

bool is_simple(const MatrixModule& m, SimplicityMethod method, std::uint64_t budget) {
  require_prime_field(m.spec);
  const std::uint64_t p = m.spec.ring.p;
  const std::size_t n = m.dimension();
  if (n == 0) return false;
  const std::vector<FpMat> gens{to_fp(m.X), to_fp(m.Y), to_fp(m.H)};
  std::vector<std::vector<std::size_t>> spaces;
  if (method == SimplicityMethod::cyclic && m.H.is_diagonal()) {
    std::map<std::uint64_t, std::vector<std::size_t>> weights;
    for (std::size_t i = 0; i < n; ++i) weights[m.H(i, i).residue()].push_back(i);
    for (auto& [w, idx] : weights) spaces.push_back(std::move(idx));
  } else {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    spaces.push_back(std::move(all));
  }
  std::uint64_t count = 0;
  for (const auto& s : spaces) count += projective_count(p, s.size(), budget);
  if (count > budget) {
    throw std::runtime_error("simplicity test needs more than " + std::to_string(budget) + " vectors");
  }
  for (const auto& s : spaces) {
    const bool ok = for_each_projective(s, n, p, [&](const Vec& v) { return generated_dimension(gens, v, p) == n; });
    if (!ok) return false;
  }
  return true;
}

namespace {

// Basis of the nullspace of rows (each of length cols).
std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t inv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = (p - rows[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool invertible(const Vec& flat, std::size_t n, std::uint64_t p) {
  Echelon e(p);
  for (std::size_t r = 0; r < n; ++r) {
    if (!e.insert(Vec(flat.begin() + static_cast<std::ptrdiff_t>(r * n),
                      flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * n)))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_isomorphic(const MatrixModule& a, const MatrixModule& b, std::uint64_t budget, std::uint64_t seed) {
  require_prime_field(a.spec);
  if (!(a.spec == b.spec)) throw std::invalid_argument("modules over different algebras");
  const std::size_t n = a.dimension();
  if (n != b.dimension()) return false;
  const std::uint64_t p = a.spec.ring.p;
  // Unknown T(r, c) at index r n + c; equations T A1 - A2 T = 0 for A in X, Y, H.
  std::vector<Vec> rows;
  const std::pair<const Matrix*, const Matrix*> pairs[] = {{&a.X, &b.X}, {&a.Y, &b.Y}, {&a.H, &b.H}};
  for (const auto& [m1, m2] : pairs) {
    const FpMat A1 = to_fp(*m1), A2 = to_fp(*m2);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Vec eq(n * n, 0);
        for (std::size_t k = 0; k < n; ++k) {
          eq[r * n + k] = (eq[r * n + k] + A1[k][c]) % p;
          eq[k * n + c] = (eq[k * n + c] + p - A2[r][k]) % p;
        }
        rows.push_back(std::move(eq));
      }
    }
  }
  const std::vector<Vec> basis = nullspace(std::move(rows), n * n, p);
  if (basis.empty()) return false;
  for (const Vec& t : basis) {
    if (invertible(t, n, p)) return true;
  }
  auto combine = [&](const std::vector<std::uint64_t>& coeffs) {
    Vec t(n * n, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = (t[j] + coeffs[i] * basis[i][j]) % p;
    }
    return t;
  };
  const std::size_t r = basis.size();
  if (projective_count(p, r, budget) <= budget) {
    std::vector<std::size_t> coords(r);
    for (std::size_t i = 0; i < r; ++i) coords[i] = i;
    bool found = false;
    for_each_projective(coords, r, p, [&](const Vec& c) {
      found = invertible(combine(c), n, p);
      return !found;
    });
    return found;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<std::uint64_t> c(r);
    for (auto& v : c) v = dist(rng);
    if (invertible(combine(c), n, p)) return true;
  }
  // A nonzero map between simple modules is invertible, so simple inputs never get here.
  throw std::runtime_error("isomorphism test inconclusive: intertwiner space of dimension " +
                           std::to_string(r) + " too large to enumerate");
}

std::vector<MatrixModule> classify_simples(const QghaSpec& spec, unsigned N_max) {
  require_prime_field(spec);
  const std::uint32_t p = spec.ring.p;
  std::vector<MatrixModule> candidates;
  for (const WeightCycle& cycle : find_cycles(spec.f, p, N_max)) {
    for (std::uint32_t m0 = 0; m0 < p; ++m0) {
      std::optional<MuData> md;
      try {
        md = mu_data(cycle, spec.q, spec.g, Scalar::mod(m0, p), N_max / cycle.period());
      } catch (const std::domain_error&) {
        continue;  // |lambda| |mu| > N_max
      }
      for (std::uint32_t gam = 1; gam < p; ++gam) {
        ModuleParams params{md, Scalar::mod(gam, p), {}, N_max};
        candidates.push_back(build_module(ModuleFamily::a, spec, params));
        if (md->has_zero()) candidates.push_back(build_module(ModuleFamily::b, spec, params));
      }
    }
  }
  for (std::uint32_t a = 0; a < p; ++a) {
    ModuleParams params{std::nullopt, spec.ring(1), Scalar::mod(a, p), N_max};
    try {
      candidates.push_back(build_module(ModuleFamily::c, spec, params));
    } catch (const std::domain_error&) {
    }
  }
  std::vector<MatrixModule> simples;
  for (MatrixModule& m : candidates) {
    if (!verify_module(m).all_zero()) {
      throw std::logic_error("constructed module fails the defining relations");
    }
    const auto method = m.dimension() <= 3 ? SimplicityMethod::exhaustive : SimplicityMethod::cyclic;
    if (!is_simple(m, method)) continue;
    const bool duplicate = std::any_of(simples.begin(), simples.end(), [&](const MatrixModule& s) {
      return s.dimension() == m.dimension() && is_isomorphic(s, m);
    });
    if (!duplicate) simples.push_back(std::move(m));
  }
  std::stable_sort(simples.begin(), simples.end(),
                   [](const MatrixModule& a, const MatrixModule& b) { return a.dimension() < b.dimension(); });
  return simples;
}

QghaSpec iso_transform(const IsoTransform& t, const QghaSpec& spec) {
  const Ring& ring = spec.ring;
  const Scalar a = ring.coerce(t.a);
  const Scalar b = ring.coerce(t.b);
  switch (t.kind) {
    case TransformKind::tau: {
      const Poly shift{-a, ring(1)};
      return {ring, spec.q, spec.f.compose(shift) + Poly(a), spec.g.compose(shift)};
    }
    case TransformKind::sigma: {
      if (a.is_zero()) throw std::domain_error("sigma needs lambda != 0");
      const Poly scale{ring(0), a.inverse()};
      return {ring, spec.q, spec.f.compose(scale) * a, spec.g.compose(scale)};
    }
    case TransformKind::rho:
      if (a.is_zero() || b.is_zero()) throw std::domain_error("rho needs lambda, mu != 0");
      return {ring, spec.q, spec.f, spec.g * (a * b)};
  }
  throw std::logic_error("unknown transform");
}

MatrixModule transform_module(const IsoTransform& t, const MatrixModule& m) {
  MatrixModule r = m;
  r.spec = iso_transform(t, m.spec);
  const Ring& ring = m.spec.ring;
  const Scalar a = ring.coerce(t.a);
  auto map_weights = [&](auto fn) {
    if (r.mu) {
      for (auto& v : r.mu->cycle.values) v = fn(v);
    }
  };
  switch (t.kind) {
    case TransformKind::tau:
      r.H = r.H + a * Matrix::identity(m.dimension(), ring);
      map_weights([&](const Scalar& v) { return v + a; });
      if (m.family == ModuleFamily::c) r.alpha = m.alpha + a;
      break;
    case TransformKind::sigma:
      r.H = a * r.H;
      map_weights([&](const Scalar& v) { return v * a; });
      if (m.family == ModuleFamily::c) r.alpha = m.alpha * a;
      break;
    case TransformKind::rho:
      r.X = a * r.X;
      r.Y = ring.coerce(t.b) * r.Y;
      // The rescaled action no longer matches the normalized family formulas.
      r.mu.reset();
      r.nu.clear();
      break;
  }
  return r;
}

}  // namespace weylcomb
