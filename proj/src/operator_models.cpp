#include "weylcomb/operator_models.hpp"

#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

void LatticeVector::add(const Partition& lambda, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coefficients.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coefficients.erase(it);
  }
}

std::string LatticeVector::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : coefficients) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.to_string() << "*";
    os << lambda.to_string();
  }
  return os.str();
}

LatticeVector young_apply(YoungDirection direction, const LatticeVector& v, const CoverFunction& up,
                          const CoverFunction& down) {
  LatticeVector out;
  out.size_cap = v.size_cap;
  for (const auto& [lambda, c] : v.coefficients) {
    if (direction == YoungDirection::up && lambda.size() >= v.size_cap) {
      throw std::domain_error("no headroom to add a box to " + lambda.to_string() + " under size cap " +
                              std::to_string(v.size_cap));
    }
    for (const Partition& mu : direction == YoungDirection::up ? up(lambda) : down(lambda)) out.add(mu, c);
  }
  return out;
}

YoungReport young_commutator_report(unsigned N, const CoverFunction& up, const CoverFunction& down) {
  YoungReport report;
  for (unsigned size = 0; size <= N; ++size) {
    for (const Partition& lambda : enumerate_partitions(size)) {
      LatticeVector v;
      v.size_cap = N + 1;
      v.add(lambda, 1);
      LatticeVector du = young_apply(YoungDirection::down, young_apply(YoungDirection::up, v, up, down), up, down);
      const LatticeVector ud = young_apply(YoungDirection::up, young_apply(YoungDirection::down, v, up, down), up, down);
      for (const auto& [mu, c] : ud.coefficients) du.add(mu, -c);
      ++report.partitions_checked;
      if (!(du == v)) {
        report.passed = false;
        report.failures.push_back(lambda);
      }
    }
  }
  return report;
}

bool young_commutator_check(unsigned N) { return young_commutator_report(N).passed; }

mpq_class witt_coefficient(const WittParams& params, int m, int l) {
  return mpq_class(l) - mpq_class(m + 1) * params.mu;
}

namespace {

using IndexVector = std::map<int, mpq_class>;

// w_m applied to a vector; empty when a nonzero term leaves [0, cap].
std::optional<IndexVector> witt_apply(const WittParams& params, int m, const IndexVector& v) {
  IndexVector out;
  for (const auto& [l, c] : v) {
    const mpq_class coeff = witt_coefficient(params, m, l) * c;
    if (coeff == 0) continue;
    const int target = l + m;
    if (target < 0 || target > static_cast<int>(params.basis_cap)) return std::nullopt;
    out[target] += coeff;
    if (out[target] == 0) out.erase(target);
  }
  return out;
}

std::string vector_string(const IndexVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : v) {
    os << (first ? "" : " + ") << c.get_str() << "*y^" << l;
    first = false;
  }
  return os.str();
}

}  // namespace

WittReport witt_action_check(const WittParams& params, int m_min, int m_max) {
  if (m_min < -1) throw std::domain_error("Witt generators start at w_{-1}");
  WittReport report;
  for (int m = m_min; m <= m_max; ++m) {
    for (int n = m_min; n <= m_max; ++n) {
      if (m + n < -1) continue;
      for (int l = 0; l <= static_cast<int>(params.basis_cap); ++l) {
        const IndexVector basis{{l, 1}};
        auto wn = witt_apply(params, n, basis);
        auto wm = witt_apply(params, m, basis);
        std::optional<IndexVector> wmwn, wnwm;
        if (wn) wmwn = witt_apply(params, m, *wn);
        if (wm) wnwm = witt_apply(params, n, *wm);
        auto rhs = witt_apply(params, m + n, basis);
        if (!wmwn || !wnwm || !rhs) {
          ++report.sites_skipped;
          continue;
        }
        ++report.sites_checked;
        IndexVector residual = *wmwn;
        for (const auto& [k, c] : *wnwm) residual[k] -= c;
        for (const auto& [k, c] : *rhs) residual[k] -= mpq_class(n - m) * c;
        std::erase_if(residual, [](const auto& kv) { return kv.second == 0; });
        if (residual.empty()) continue;
        for (const auto& [k, c] : residual) {
          if (abs(c) > report.max_residual) report.max_residual = abs(c);
        }
        report.entries.push_back({"[w_m, w_n] = (n - m) w_{m+n}",
                                  "m=" + std::to_string(m) + " n=" + std::to_string(n) + " l=" + std::to_string(l),
                                  vector_string(residual)});
      }
    }
  }
  return report;
}

namespace {

std::string entries_json(const std::vector<ReportEntry>& entries, nlohmann::ordered_json j) {
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"identity", e.identity}, {"site", e.site}, {"residual", e.residual}});
  }
  return j.dump();
}

}  // namespace

std::string WittReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["passed"] = passed();
  j["sites_checked"] = sites_checked;
  j["sites_skipped"] = sites_skipped;
  j["max_residual"] = max_residual.get_str();
  return entries_json(entries, j);
}

std::string LaurentReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["passed"] = passed();
  j["sites_checked"] = sites_checked;
  return entries_json(entries, j);
}

LaurentReport laurent_model_check(const WindowSequence& lambda, const WindowSequence& mu,
                                  const Scalar& q, const Poly& f, const Poly& g) {
  LaurentReport report;
  auto flag = [&report](const char* identity, int k, const Scalar& r) {
    ++report.sites_checked;
    if (!r.is_zero()) report.entries.push_back({identity, "k=" + std::to_string(k), r.to_string()});
  };
  for (int k = lambda.start; lambda.contains(k); ++k) {
    // h x t^k = lambda(k+1) t^{k+1} and x f(h) t^k = f(lambda(k)) t^{k+1}.
    if (lambda.contains(k + 1)) flag("hx = x f(h)", k, lambda.at(k + 1) - f.eval(lambda.at(k)));
    // y h t^k = lambda(k) mu(k) t^{k-1} and f(h) y t^k = mu(k) f(lambda(k-1)) t^{k-1}.
    if (lambda.contains(k - 1) && mu.contains(k)) {
      flag("yh = f(h) y", k, mu.at(k) * (lambda.at(k) - f.eval(lambda.at(k - 1))));
    }
    // (yx - q xy) t^k = (mu(k+1) - q mu(k)) t^k.
    if (mu.contains(k) && mu.contains(k + 1)) {
      flag("yx - qxy = g(h)", k, mu.at(k + 1) - q * mu.at(k) - g.eval(lambda.at(k)));
    }
  }
  return report;
}

}  // namespace weylcomb
