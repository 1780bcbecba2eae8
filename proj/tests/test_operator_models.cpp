#include <doctest.h>

#include "weylcomb/operator_models.hpp"
#include "weylcomb/qgha.hpp"

using namespace weylcomb;

TEST_CASE("x and y on Young's lattice") {
  LatticeVector v;
  v.size_cap = 4;
  v.add(Partition({1}), 1);
  const LatticeVector up = young_apply(YoungDirection::up, v);
  CHECK(up.coefficients.size() == 2);
  const LatticeVector back = young_apply(YoungDirection::down, up);
  CHECK(back.coefficients.at(Partition({1})) == Scalar(2));
  LatticeVector full;
  full.size_cap = 2;
  full.add(Partition({2}), 1);
  CHECK_THROWS_AS(young_apply(YoungDirection::up, full), std::domain_error);
}

TEST_CASE("the Weyl relation holds on Young's lattice") {
  const YoungReport r = young_commutator_report(12);
  CHECK(r.passed);
  CHECK(r.partitions_checked == 272);
  CHECK(young_commutator_check(8));
}

TEST_CASE("a corrupted cover function is caught") {
  const CoverFunction lossy = [](const Partition& p) {
    auto c = up_covers(p);
    if (p.size() == 3 && !c.empty()) c.pop_back();
    return c;
  };
  const YoungReport r = young_commutator_report(5, lossy);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("Witt action") {
  for (const char* mu : {"0", "1", "1/2", "-3/7"}) {
    const WittParams params{mpq_class(mu), 20};
    const WittReport r = witt_action_check(params, -1, 6);
    CHECK(r.passed());
    CHECK(r.sites_checked > 0);
    CHECK(r.max_residual == 0);
  }
  CHECK(witt_coefficient(WittParams{mpq_class(1, 2), 20}, 2, 3) == mpq_class(3, 2));
  CHECK(witt_action_check(WittParams{0, 20}, -1, 3).to_json().find("\"schema\":1") != std::string::npos);
}

TEST_CASE("Laurent model from cycle and mu data") {
  const Ring F5 = Ring::prime_field(5);
  const Poly f = Poly{F5(1), F5(0), F5(1)};
  const Poly g = Poly{F5(0), F5(1)};
  const Scalar q = F5(2);
  for (const auto& cycle : find_cycles(f, 5, 16)) {
    for (long long m0 = 0; m0 < 5; ++m0) {
      const MuData mu = mu_data(cycle, q, g, F5(m0));
      WindowSequence lam{0, {}}, mus{0, {}};
      for (unsigned i = 0; i < 2 * mu.dimension() + 1; ++i) {
        lam.values.push_back(cycle.at(i));
        mus.values.push_back(mu.at(i));
      }
      const LaurentReport r = laurent_model_check(lam, mus, q, f, g);
      CHECK(r.passed());
      CHECK(r.sites_checked > 0);
    }
  }
}

TEST_CASE("Laurent model rejects broken sequences") {
  const Poly f{1, 1};  // f(h) = h + 1
  const Poly g{0, 1};
  WindowSequence lam{-2, {0, 1, 2, 3, 4}};
  WindowSequence mu{-2, {0, 0, 0, 0, 0}};
  const LaurentReport r = laurent_model_check(lam, mu, 1, f, g);
  CHECK_FALSE(r.passed());
  // mu(k+1) = mu(k) + lambda(k) fixes mu up to mu(-2).
  WindowSequence good{-2, {5, 5, 6, 8, 11}};
  CHECK(laurent_model_check(lam, good, 1, f, g).passed());
}
