#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcomb/qgha.hpp"

namespace weylcomb {

/// Dense square matrix over the rationals or F_p; entry (r, c) is row r, column c.
/// Column j holds the image of basis vector t^j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, const Scalar& zero);
  static Matrix identity(std::size_t n, const Ring& ring);

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

/// p(M) by Horner's rule.
Matrix evaluate(const Poly& p, const Matrix& m);

enum class ModuleFamily { a, b, c };
char family_tag(ModuleFamily f);

/// X, Y, H realizing an H_q(f, g)-module on the basis t^0..t^{N-1}.
struct MatrixModule {
  QghaSpec spec;
  ModuleFamily family = ModuleFamily::a;
  Matrix X, Y, H;
  // Provenance: families a and b.
  std::optional<MuData> mu;
  Scalar gamma{0};
  // Provenance: family c.
  Scalar alpha{0};
  std::vector<Scalar> nu;  // nu(0..N)

  std::size_t dimension() const { return H.size(); }
  std::string to_json() const;
};

/// Parameters for build_module: families a and b need `mu` and `gamma`, family c needs `alpha`.
struct ModuleParams {
  std::optional<MuData> mu;
  Scalar gamma{1};
  Scalar alpha{0};
  unsigned max_dimension = 64;  // guard on the family-c nu sequence
};

/// Family a: H = diag lambda(i), X t^i = t^{i+1}, X t^{N-1} = gamma t^0, Y t^i = mu(i) t^{i-1},
/// Y t^0 = gamma^{-1} mu(0) t^{N-1}. Family b: H as in a, Y t^i = t^{i-1}, Y t^0 = gamma^{-1} t^{N-1},
/// X t^i = mu(i+1) t^{i+1}, X t^{N-1} = gamma mu(0) t^0; needs some mu(i) = 0.
/// Family c: H = diag f^{oi}(alpha), X t^i = t^{i+1}, X t^{n-1} = 0, Y t^i = nu(i) t^{i-1}, where
/// nu(0) = 0, nu(i+1) = q nu(i) + g(f^{oi}(alpha)) and n is the first index with nu(n) = 0.
/// Throws std::domain_error on invalid parameters.
MatrixModule build_module(ModuleFamily family, const QghaSpec& spec, const ModuleParams& params);

struct Residuals {
  Matrix hx;  // H X - X f(H)
  Matrix yh;  // Y H - f(H) Y
  Matrix yx;  // Y X - q X Y - g(H)
  bool all_zero() const { return hx.is_zero() && yh.is_zero() && yx.is_zero(); }
};

Residuals verify_module(const MatrixModule& m);

enum class SimplicityMethod { exhaustive, cyclic };

/// Exhaustive: every nonzero vector (up to scale) must generate the whole module.
/// Cyclic: when H is diagonal, only vectors inside an H-weight space need checking, since every
/// nonzero submodule contains a weight vector; otherwise falls back to exhaustive.
/// Prime field only. Throws std::runtime_error when the vector count exceeds `budget`.
bool is_simple(const MatrixModule& m, SimplicityMethod method, std::uint64_t budget = 2'000'000);

/// Searches the intertwiner space {T : T X1 = X2 T, T Y1 = Y2 T, T H1 = H2 T} for an invertible
/// element: exhaustively when p^dim <= budget, else by sampling with `seed`. For simple inputs any
/// nonzero intertwiner is invertible. Throws std::runtime_error when undecided.
bool is_isomorphic(const MatrixModule& a, const MatrixModule& b, std::uint64_t budget = 200'000,
                   std::uint64_t seed = 0x5eed);

/// All simple modules of dimension <= N_max built from families a, b, c, filtered by
/// simplicity and deduplicated up to isomorphism. Prime field only.
std::vector<MatrixModule> classify_simples(const QghaSpec& spec, unsigned N_max);

enum class TransformKind { tau, sigma, rho };

struct IsoTransform {
  TransformKind kind = TransformKind::tau;
  Scalar a{0};  // alpha for tau, lambda for sigma and rho
  Scalar b{1};  // mu for rho
};

/// tau(alpha): (f(h - alpha) + alpha, g(h - alpha)); sigma(lambda): (lambda f(h / lambda), g(h / lambda));
/// rho(lambda, mu): (f, lambda mu g). q is unchanged. Throws std::domain_error on zero scales.
QghaSpec iso_transform(const IsoTransform& t, const QghaSpec& spec);

/// The same module seen over the transformed algebra: H + alpha, lambda H, or (lambda X, mu Y).
MatrixModule transform_module(const IsoTransform& t, const MatrixModule& m);

}  // namespace weylcomb
