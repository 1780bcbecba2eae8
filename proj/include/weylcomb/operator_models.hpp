#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weylcomb/partition.hpp"
#include "weylcomb/poly.hpp"

namespace weylcomb {

/// Finite linear combination of partitions, all of size <= size_cap.
struct LatticeVector {
  std::map<Partition, Scalar> coefficients;
  unsigned size_cap = 0;

  void add(const Partition& lambda, const Scalar& c);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coefficients == b.coefficients;
  }
  std::string to_string() const;
};

enum class YoungDirection { up, down };

using CoverFunction = std::function<std::vector<Partition>(const Partition&)>;

/// x (add a box) or y (remove a box), extended linearly. Up requires every
/// partition to have size < size_cap; throws std::domain_error otherwise.
LatticeVector young_apply(YoungDirection direction, const LatticeVector& v,
                          const CoverFunction& up = up_covers, const CoverFunction& down = down_covers);

struct YoungReport {
  bool passed = true;
  unsigned partitions_checked = 0;
  std::vector<Partition> failures;
};

/// Checks (down o up - up o down)(lambda) = lambda for every partition of size <= N.
/// The cover functions are injectable so a corrupted relation can serve as a negative control.
YoungReport young_commutator_report(unsigned N, const CoverFunction& up = up_covers,
                                    const CoverFunction& down = down_covers);
bool young_commutator_check(unsigned N);

struct WittParams {
  mpq_class mu;
  unsigned basis_cap = 20;
};

struct ReportEntry {
  std::string identity;
  std::string site;
  std::string residual;
};

struct WittReport {
  std::vector<ReportEntry> entries;  // nonzero residuals only
  unsigned sites_checked = 0;
  unsigned sites_skipped = 0;
  mpq_class max_residual = 0;  // largest absolute residual coefficient
  bool passed() const { return entries.empty(); }
  std::string to_json() const;
};

/// Coefficient of w_m . y^l = (l - (m+1) mu) y^{m+l}.
mpq_class witt_coefficient(const WittParams& params, int m, int l);

/// Verifies (w_m w_n - w_n w_m) y^l = (n - m) w_{m+n} y^l for m, n in [m_min, m_max]
/// with m + n >= -1. A site is skipped when a nonzero term would leave [0, basis_cap].
WittReport witt_action_check(const WittParams& params, int m_min, int m_max);

/// Scalar sequence on the integer window [start, start + values.size()).
struct WindowSequence {
  int start = 0;
  std::vector<Scalar> values;
  bool contains(int k) const { return k >= start && k < start + static_cast<int>(values.size()); }
  const Scalar& at(int k) const { return values.at(static_cast<std::size_t>(k - start)); }
};

struct LaurentReport {
  std::vector<ReportEntry> entries;  // violations only
  unsigned sites_checked = 0;
  bool passed() const { return entries.empty(); }
  std::string to_json() const;
};

/// Operators x t^k = t^{k+1}, y t^k = mu(k) t^{k-1}, h t^k = lambda(k) t^k. Checks
/// hx = x f(h), yh = f(h) y and yx - q xy = g(h) on every t^k whose images stay in the window.
LaurentReport laurent_model_check(const WindowSequence& lambda, const WindowSequence& mu,
                                  const Scalar& q, const Poly& f, const Poly& g);

}  // namespace weylcomb
