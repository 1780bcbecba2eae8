#include <doctest.h>

#include "oracles.hpp"
#include "weylcomb/classical.hpp"
#include "weylcomb/coeff_table.hpp"

using namespace weylcomb;

TEST_CASE("classical numbers against brute force") {
  for (unsigned n = 0; n <= 8; ++n) {
    const auto cyc = oracle::cycle_counts(n);
    const auto blk = oracle::block_counts(n);
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(stirling1_signless(n, k) == cyc[k]);
      CHECK(stirling2(n, k) == blk[k]);
    }
    mpz_class b = 0;
    for (const auto& v : blk) b += v;
    CHECK(bell(n) == b);
    if (n >= 1) {
      const auto desc = oracle::descent_counts(n);
      for (unsigned k = 1; k <= n; ++k) CHECK(eulerian(n, k) == desc[k - 1]);
    }
  }
  CHECK(classical_number(parse_classical_kind("bell"), 10) == 115975);
  CHECK_THROWS_AS(classical_number(ClassicalKind::stirling2, 3, 4), std::out_of_range);
  CHECK_THROWS(parse_classical_kind("lah"));
}

TEST_CASE("classical numbers hidden in the coefficient table") {
  const CoeffTable t = coeff_table_recurrence(9);
  for (unsigned n = 1; n <= 9; ++n) {
    std::vector<mpz_class> by_k(n + 1, 0), by_len(n, 0);
    mpz_class total = 0;
    for (const auto& e : t.row(n)) {
      by_k[e.k] += e.value;
      by_len[e.lambda.length()] += e.value;
      total += e.value;
    }
    const auto desc = oracle::descent_counts(n);
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(by_k[k] == stirling1_signless(n, k));
      CHECK(t(n, Partition(std::vector<unsigned>(n - k, 1))) == stirling2(n, k));
    }
    for (unsigned l = 0; l < n; ++l) CHECK(by_len[l] == desc[l]);
    CHECK(by_k[1] == factorial(n - 1));
    CHECK(total == factorial(n));
    CHECK(specialize_value(universal_power(n, 1), {{0, 1}, {1, 1}}, 1) == Scalar(bell(n)));
  }
}

TEST_CASE("generalized Stirling numbers") {
  // (x^2 d)^n gives the Lah numbers.
  CHECK(generalized_stirling(3, 1, 2, 1, StirlingRoute::ctable) == 6);
  CHECK(generalized_stirling(3, 2, 2, 1, StirlingRoute::ctable) == 6);
  CHECK(generalized_stirling(3, 3, 2, 1, StirlingRoute::ctable) == 1);
  // q = d = 1 gives Stirling numbers of the second kind.
  for (unsigned k = 1; k <= 6; ++k) CHECK(generalized_stirling(6, k, 1, 1, StirlingRoute::weyl) == stirling2(6, k));
  for (unsigned d = 1; d <= 2; ++d)
    for (unsigned q = d; q <= 3; ++q)
      for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = d; k <= n * d; ++k)
          CHECK(generalized_stirling(n, k, q, d, StirlingRoute::ctable) ==
                generalized_stirling(n, k, q, d, StirlingRoute::weyl));
  CHECK_THROWS_AS(generalized_stirling(3, 1, 1, 2, StirlingRoute::weyl), std::domain_error);
  CHECK_THROWS_AS(generalized_stirling(3, 7, 2, 2, StirlingRoute::ctable), std::domain_error);
}

TEST_CASE("formal ODE solutions") {
  std::vector<Scalar> ones(12, Scalar(1));
  const auto x = ode_solve(ones, 10);
  for (unsigned n = 1; n <= 10; ++n) CHECK(x[n - 1] == Scalar(factorial(n - 1)));
  for (const auto& r : ode_residual(ones, x)) CHECK(r.is_zero());
  const auto e = ode_solve({1, 1}, 10);
  for (const auto& v : e) CHECK(v == Scalar(1));
  // Y(z) = z^2/2: X' = X^2/2 with X(0) = 0 stays zero.
  for (const auto& v : ode_solve({0, 0, 1}, 6)) CHECK(v.is_zero());
  // A wrong candidate leaves a residual.
  auto wrong = e;
  wrong[3] = Scalar(2);
  bool any = false;
  for (const auto& r : ode_residual({1, 1}, wrong)) any = any || !r.is_zero();
  CHECK(any);
  CHECK_THROWS_AS(ode_solve({Scalar::mod(1, 5)}, 3), std::domain_error);
}
