#pragma once

#include <map>
#include <optional>

#include "weylcomb/ore_algebra.hpp"

namespace weylcomb {

/// Algebra endomorphism given by the images of the generators. `verified` is set
/// only after the images were checked against the defining relation.
struct EndoSpec {
  OreElement image_x;
  OreElement image_y;
  bool verified = false;
};

/// Generators of the automorphism groups of A_h and the Weyl algebra.
struct GeneratorMap {
  enum class Kind { phi, psi, tau, tau_ab };
  Kind kind = Kind::phi;
  Poly f;           // phi, psi
  Scalar alpha{1};  // tau_ab
  Scalar beta{0};   // tau_ab

  static GeneratorMap phi(Poly f) { return {Kind::phi, std::move(f), 1, 0}; }
  static GeneratorMap psi(Poly f) { return {Kind::psi, std::move(f), 1, 0}; }
  static GeneratorMap tau() { return {Kind::tau, {}, 1, 0}; }
  static GeneratorMap tau_ab(Scalar alpha, Scalar beta) { return {Kind::tau_ab, {}, std::move(alpha), std::move(beta)}; }
};

/// True iff image_y*image_x - q*image_x*image_y == h(image_x).
bool satisfies_relation(const OreElement& image_x, const OreElement& image_y);

/// Builds and verifies one of phi_f (x->x, y->y+f(x)), psi_f (x->x+f(y), y->y),
/// tau (x->-y, y->x; Weyl algebra only) or tau_{a,b} (x->a*x+b, y->a^(deg h-1)*y).
/// Throws std::domain_error when the requested map is not an automorphism of `spec`.
EndoSpec make_generator_map(const GeneratorMap& gen, const OreAlgebraSpec& spec);

/// Wraps arbitrary images, verifying the relation; throws if it fails.
EndoSpec make_endomorphism(OreElement image_x, OreElement image_y);

/// Substitution x -> image_x, y -> image_y. Throws std::logic_error on an unverified map.
OreElement apply_map(const EndoSpec& e, const OreElement& a);
/// outer o inner.
EndoSpec compose(const EndoSpec& outer, const EndoSpec& inner);

/// A derivation, determined by its values on x and y.
struct DerivSpec {
  enum class Kind { d_f, ad, e_x, e_y, custom };
  Kind kind;
  OreElement image_x;
  OreElement image_y;
  std::optional<OreElement> inner;  // for ad
};

/// D_f: x -> 0, y -> f(x).
DerivSpec make_d_f(const OreAlgebraSpec& spec, const Poly& f);
/// ad_a(b) = [a, b].
DerivSpec make_ad(const OreElement& a);
/// E_x: x -> y^(p-1), y -> 0. Requires characteristic p > 0.
DerivSpec make_e_x(const OreAlgebraSpec& spec);
/// E_y: x -> 0, y -> x^(p-1). Requires characteristic p > 0.
DerivSpec make_e_y(const OreAlgebraSpec& spec);
/// Checks D(y)x + yD(x) - q(D(x)y + xD(y)) - D(h(x)) == 0; throws std::domain_error otherwise.
DerivSpec make_custom_derivation(OreElement image_x, OreElement image_y);

/// Value of the derivation on any element, by the Leibniz rule.
OreElement derivation_apply(const DerivSpec& d, const OreElement& a);

/// sum_k d^k(a)/k!. Requires characteristic 0; throws std::runtime_error if
/// d^cap(a) is still nonzero.
OreElement exp_derivation(const DerivSpec& d, const OreElement& a, unsigned cap = 64);

struct HInvariants {
  Poly gcd;                                   // monic gcd(h, h')
  Poly pi_h;                                  // monic h / gcd(h, h')
  std::map<unsigned, Poly> multiplicity_profile;  // multiplicity -> squarefree product
};

/// Over F_p the profile is assembled from a full factorization; over the rationals
/// from the squarefree gcd chain.
HInvariants h_invariants(const Poly& h);

/// Checks g(x) == nu * h(alpha*x + beta) with alpha*nu != 0, the criterion for A_h ~ A_g.
bool verify_ah_isomorphism(const Poly& h, const Poly& g, const Scalar& alpha, const Scalar& beta,
                           const Scalar& nu);

}  // namespace weylcomb
