#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcomb/ore_maps.hpp"

using namespace weylcomb;

namespace {

OreElement random_element(std::mt19937_64& rng, const OreAlgebraSpec& spec, unsigned ydeg = 2) {
  OreElement e(spec);
  for (unsigned j = 0; j <= ydeg; ++j) e.add_term(oracle::random_poly(rng, 3).in_ring(spec.ring.p), j);
  return e;
}

}  // namespace

TEST_CASE("generator maps satisfy the defining relation") {
  const auto W = OreAlgebraSpec::weyl();
  const Poly f{1, 0, -2};
  for (const auto& gen : {GeneratorMap::phi(f), GeneratorMap::psi(f), GeneratorMap::tau(),
                          GeneratorMap::tau_ab(3, 5)}) {
    const EndoSpec e = make_generator_map(gen, W);
    CHECK(e.verified);
    CHECK(satisfies_relation(e.image_x, e.image_y));
  }
  const auto A = OreAlgebraSpec::a_h(Poly{0, 0, 1});  // h = x^2
  CHECK(make_generator_map(GeneratorMap::phi(f), A).verified);
  CHECK(make_generator_map(GeneratorMap::tau_ab(2, 0), A).verified);
  // x -> 2x + 1 does not preserve h = x^2 up to scale.
  CHECK_THROWS_AS(make_generator_map(GeneratorMap::tau_ab(2, 1), A), std::domain_error);
  CHECK_THROWS_AS(make_generator_map(GeneratorMap::tau(), A), std::domain_error);
}

TEST_CASE("tau has order four") {
  const auto W = OreAlgebraSpec::weyl();
  const auto x = OreElement::x(W), y = OreElement::y(W);
  const EndoSpec t = make_generator_map(GeneratorMap::tau(), W);
  const EndoSpec t2 = compose(t, t);
  CHECK(apply_map(t2, x) == -x);
  CHECK(apply_map(t2, y) == -y);
  const EndoSpec t4 = compose(t2, t2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(rng, W);
    CHECK(apply_map(t4, a) == a);
  }
}

TEST_CASE("maps are algebra homomorphisms") {
  const auto A = OreAlgebraSpec::a_h(Poly{0, 1, 1});
  const EndoSpec phi = make_generator_map(GeneratorMap::phi(Poly{2, 1}), A);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(rng, A), b = random_element(rng, A);
    CHECK(apply_map(phi, a * b) == apply_map(phi, a) * apply_map(phi, b));
  }
  CHECK_THROWS_AS(apply_map(EndoSpec{OreElement::x(A), OreElement::y(A), false}, OreElement::x(A)), std::logic_error);
  CHECK_THROWS_AS(make_endomorphism(OreElement::y(A), OreElement::x(A)), std::domain_error);
}

TEST_CASE("exp(D_f) equals phi_f") {
  const auto W = OreAlgebraSpec::weyl();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const Poly f = oracle::random_poly(rng, 5);
    const DerivSpec d = make_d_f(W, f);
    const EndoSpec phi = make_generator_map(GeneratorMap::phi(f), W);
    const auto a = random_element(rng, W);
    CHECK(exp_derivation(d, a) == apply_map(phi, a));
  }
}

TEST_CASE("derivations obey the Leibniz rule") {
  const auto A = OreAlgebraSpec::a_h(Poly{0, 1, 0, 1});
  std::mt19937_64 rng(23);
  const auto ad = make_ad(random_element(rng, A, 1));
  const auto df = make_d_f(A, Poly{1, 1});
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(rng, A), b = random_element(rng, A);
    for (const auto& d : {ad, df}) {
      CHECK(derivation_apply(d, a * b) == derivation_apply(d, a) * b + a * derivation_apply(d, b));
    }
  }
}

TEST_CASE("E_x and E_y in characteristic p") {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto W = OreAlgebraSpec::weyl(Ring::prime_field(p));
    std::mt19937_64 rng(p);
    for (const auto& d : {make_e_x(W), make_e_y(W)}) {
      for (int i = 0; i < 10; ++i) {
        const auto a = random_element(rng, W), b = random_element(rng, W);
        CHECK(derivation_apply(d, a * b) == derivation_apply(d, a) * b + a * derivation_apply(d, b));
      }
    }
    CHECK(derivation_apply(make_e_x(W), OreElement::x(W)) == OreElement::y(W).pow(p - 1));
  }
  CHECK_THROWS_AS(make_e_x(OreAlgebraSpec::weyl()), std::domain_error);
}

TEST_CASE("custom derivations are checked against the relation") {
  const auto W = OreAlgebraSpec::weyl();
  CHECK_NOTHROW(make_custom_derivation(OreElement::constant(W, 1), OreElement::constant(W, 0)));
  CHECK_THROWS_AS(make_custom_derivation(OreElement::x(W), OreElement::constant(W, 0)), std::domain_error);
}

TEST_CASE("invariants of h") {
  const Poly x = Poly::variable();
  const HInvariants inv = h_invariants(x.pow(3) - x.pow(2));
  CHECK(inv.gcd == x);
  CHECK(inv.pi_h == x * x - x);
  CHECK(inv.multiplicity_profile.at(2) == x);
  CHECK(inv.multiplicity_profile.at(1) == x - Poly(1));
  // 3/4 * (2x + 2)^2 = 3x^2 + 6x + 3
  CHECK(verify_ah_isomorphism(x * x, Poly{3, 6, 3}, 2, 2, Scalar(3) / Scalar(4)));
  CHECK_FALSE(verify_ah_isomorphism(x * x, x * x + Poly(1), 1, 0, 1));
}
