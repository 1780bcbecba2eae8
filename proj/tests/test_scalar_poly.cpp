#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcomb/poly.hpp"

using namespace weylcomb;

TEST_CASE("scalar arithmetic over Q and F_p") {
  CHECK(Scalar::parse("-3/6").to_string() == "-1/2");
  const Scalar a = Scalar::mod(3, 7);
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::mod(-1, 7).residue() == 6);
  CHECK((Scalar(1) / Scalar(2)).in_ring(7) == Scalar::mod(4, 7));
  CHECK_THROWS_AS(Scalar::mod(1, 5) + Scalar::mod(1, 7), std::invalid_argument);
  CHECK_THROWS(Scalar(0).inverse());
  CHECK(Scalar::mod(2, 5).pow(4).is_one());
}

TEST_CASE("ring tags") {
  CHECK(Ring::parse("rat").p == 0);
  CHECK(Ring::parse("Q").p == 0);
  CHECK(Ring::parse("fp:13").p == 13);
  CHECK_THROWS_AS(Ring::parse("fp:12"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("zz"), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("polynomial basics") {
  const Poly x = Poly::variable();
  const Poly p = x * x - Poly(2) * x + Poly(2);
  CHECK(p.to_string() == "x^2 - 2*x + 2");
  CHECK(p.degree() == 2);
  CHECK(p.eval(3) == Scalar(5));
  CHECK(p.compose(x + Poly(1)).to_string() == "x^2 + 1");
  CHECK(p.derivative() == Poly(2) * x - Poly(2));
  CHECK(p.scale_variable(2).to_string() == "4*x^2 - 4*x + 2");
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("division and gcd") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = oracle::random_poly(rng, 5);
    Poly b = oracle::random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const Poly c = oracle::random_poly(rng, 2);
    if (c.is_zero()) continue;
    const Poly g = gcd(a * c, b * c);
    CHECK(divmod(a * c, g).second.is_zero());
    CHECK(divmod(b * c, g).second.is_zero());
    CHECK(divmod(g, c.monic()).second.is_zero());
  }
  CHECK_THROWS_AS(exact_div(Poly::variable(), Poly::variable() + Poly(1)), std::domain_error);
}

TEST_CASE("squarefree decomposition over Q") {
  const Poly x = Poly::variable();
  const Poly f = (x - Poly(1)).pow(3) * (x + Poly(2)).pow(2) * x;
  const auto sf = squarefree_decomposition(f);
  Poly back(1);
  for (const auto& [m, p] : sf) back = back * p.pow(m);
  CHECK(back == f.monic());
  REQUIRE(sf.size() == 3);
  CHECK(sf[0].second == x);
}

TEST_CASE("factorization over F_p") {
  const Ring F5 = Ring::prime_field(5);
  const Poly x = Poly::variable().in_ring(5);
  // x^4 - 1 splits completely over F_5.
  const Poly f = x.pow(4) - Poly(F5(1));
  const auto fac = factor_fp(f);
  CHECK(fac.size() == 4);
  Poly back(F5(1));
  for (const auto& [p, m] : fac) back = back * p.pow(m);
  CHECK(back == f);
  // -2 is not a square mod 5.
  CHECK(factor_fp(x * x + Poly(F5(2))).size() == 1);
  const auto g = factor_fp(x.pow(2) * (x + Poly(F5(1))).pow(5));
  REQUIRE(g.size() == 2);
  CHECK(g[0].second == 2);
  CHECK(g[1].second == 5);
}
