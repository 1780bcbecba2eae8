#include "weylcomb/ore_maps.hpp"

#include <stdexcept>

namespace weylcomb {

bool satisfies_relation(const OreElement& image_x, const OreElement& image_y) {
  const OreAlgebraSpec& spec = image_x.spec();
  OreElement lhs = image_y * image_x - spec.q * (image_x * image_y);
  return lhs == evaluate(spec.h, image_x);
}

EndoSpec make_endomorphism(OreElement image_x, OreElement image_y) {
  if (!satisfies_relation(image_x, image_y)) {
    throw std::domain_error("images " + image_x.to_string() + ", " + image_y.to_string() +
                            " do not satisfy the defining relation");
  }
  return {std::move(image_x), std::move(image_y), true};
}

EndoSpec make_generator_map(const GeneratorMap& gen, const OreAlgebraSpec& spec) {
  const OreElement x = OreElement::x(spec);
  const OreElement y = OreElement::y(spec);
  switch (gen.kind) {
    case GeneratorMap::Kind::phi:
      return make_endomorphism(x, y + OreElement::term(spec, gen.f, 0));
    case GeneratorMap::Kind::psi: {
      OreElement fy(spec);
      for (std::size_t n = 0; n < gen.f.coeffs().size(); ++n) {
        fy.add_term(Poly(gen.f.coeffs()[n]), static_cast<unsigned>(n));
      }
      return make_endomorphism(x + fy, y);
    }
    case GeneratorMap::Kind::tau:
      if (!(spec.q == Scalar(1)) || !(spec.h == Poly(1))) {
        throw std::domain_error("tau is only defined on the Weyl algebra (q = 1, h = 1)");
      }
      return make_endomorphism(-y, x);
    case GeneratorMap::Kind::tau_ab: {
      const Scalar alpha = spec.ring.coerce(gen.alpha);
      const Scalar beta = spec.ring.coerce(gen.beta);
      if (alpha.is_zero()) throw std::domain_error("tau_ab requires alpha != 0");
      if (spec.h.is_zero()) throw std::domain_error("tau_ab requires h != 0");
      const unsigned d = static_cast<unsigned>(spec.h.degree());
      const Poly shifted = spec.h.compose(Poly{beta, alpha});
      if (shifted != spec.h * alpha.pow(d)) {
        throw std::domain_error("(alpha, beta) = (" + alpha.to_string() + ", " + beta.to_string() +
                                ") is not in P: h(alpha*x + beta) != alpha^deg(h) * h(x)");
      }
      const Scalar y_scale = d == 0 ? alpha.inverse() : alpha.pow(d - 1);
      return make_endomorphism(OreElement::term(spec, Poly{beta, alpha}, 0), y_scale * y);
    }
  }
  throw std::logic_error("unknown generator kind");
}

OreElement apply_map(const EndoSpec& e, const OreElement& a) {
  if (!e.verified) throw std::logic_error("apply_map on an unverified endomorphism");
  OreElement result(a.spec());
  OreElement ypow = OreElement::constant(a.spec(), Scalar(1));
  unsigned j = 0;
  for (const auto& [k, p] : a.terms()) {
    for (; j < k; ++j) ypow = ypow * e.image_y;
    result += evaluate(p, e.image_x) * ypow;
  }
  return result;
}

EndoSpec compose(const EndoSpec& outer, const EndoSpec& inner) {
  return make_endomorphism(apply_map(outer, inner.image_x), apply_map(outer, inner.image_y));
}

namespace {

// D(g^n) = sum_k g^k D(g) g^(n-1-k).
OreElement derive_power(const OreElement& g, const OreElement& dg, unsigned n) {
  OreElement result(g.spec());
  if (n == 0) return result;
  std::vector<OreElement> powers{OreElement::constant(g.spec(), Scalar(1))};
  for (unsigned k = 1; k < n; ++k) powers.push_back(powers.back() * g);
  for (unsigned k = 0; k < n; ++k) result += powers[k] * dg * powers[n - 1 - k];
  return result;
}

OreElement derive_x_poly(const Poly& p, const OreElement& dx) {
  const OreElement x = OreElement::x(dx.spec());
  OreElement result(dx.spec());
  for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
    if (p.coeffs()[n].is_zero()) continue;
    result += p.coeffs()[n] * derive_power(x, dx, static_cast<unsigned>(n));
  }
  return result;
}

OreElement leibniz(const OreElement& image_x, const OreElement& image_y, const OreElement& a) {
  const OreAlgebraSpec& spec = a.spec();
  const OreElement y = OreElement::y(spec);
  OreElement result(spec);
  for (const auto& [j, p] : a.terms()) {
    const OreElement yj = OreElement::term(spec, Poly(1), j);
    result += derive_x_poly(p, image_x) * yj;
    result += OreElement::term(spec, p, 0) * derive_power(y, image_y, j);
  }
  return result;
}

void check_leibniz_constraint(const DerivSpec& d) {
  const OreAlgebraSpec& spec = d.image_x.spec();
  const OreElement x = OreElement::x(spec);
  const OreElement y = OreElement::y(spec);
  OreElement r = d.image_y * x + y * d.image_x - spec.q * (d.image_x * y + x * d.image_y) -
                 derive_x_poly(spec.h, d.image_x);
  if (!r.is_zero()) {
    throw std::domain_error("derivation images x -> " + d.image_x.to_string() + ", y -> " +
                            d.image_y.to_string() + " violate the Leibniz constraint (residual " +
                            r.to_string() + ")");
  }
}

DerivSpec checked(DerivSpec d) {
  if (!(d.image_x.spec() == d.image_y.spec())) {
    throw std::invalid_argument("derivation images live in different algebras");
  }
  check_leibniz_constraint(d);
  return d;
}

}  // namespace

DerivSpec make_d_f(const OreAlgebraSpec& spec, const Poly& f) {
  return checked({DerivSpec::Kind::d_f, OreElement(spec), OreElement::term(spec, f, 0), {}});
}

DerivSpec make_ad(const OreElement& a) {
  const OreElement x = OreElement::x(a.spec());
  const OreElement y = OreElement::y(a.spec());
  return {DerivSpec::Kind::ad, commutator(a, x), commutator(a, y), a};
}

DerivSpec make_e_x(const OreAlgebraSpec& spec) {
  const auto p = spec.ring.characteristic();
  if (p == 0) throw std::domain_error("E_x exists only in positive characteristic");
  return checked({DerivSpec::Kind::e_x, OreElement::term(spec, Poly(1), p - 1), OreElement(spec), {}});
}

DerivSpec make_e_y(const OreAlgebraSpec& spec) {
  const auto p = spec.ring.characteristic();
  if (p == 0) throw std::domain_error("E_y exists only in positive characteristic");
  return checked({DerivSpec::Kind::e_y, OreElement(spec),
                  OreElement::term(spec, Poly::monomial(Scalar(1), p - 1), 0), {}});
}

DerivSpec make_custom_derivation(OreElement image_x, OreElement image_y) {
  return checked({DerivSpec::Kind::custom, std::move(image_x), std::move(image_y), {}});
}

OreElement derivation_apply(const DerivSpec& d, const OreElement& a) {
  if (d.kind == DerivSpec::Kind::ad) return commutator(*d.inner, a);
  return leibniz(d.image_x, d.image_y, a);
}

OreElement exp_derivation(const DerivSpec& d, const OreElement& a, unsigned cap) {
  if (a.spec().ring.is_prime_field()) {
    throw std::domain_error("exp of a derivation needs characteristic 0 (k! must be invertible)");
  }
  OreElement result = a;
  OreElement term = a;
  for (unsigned k = 1;; ++k) {
    term = derivation_apply(d, term);
    if (term.is_zero()) return result;
    if (k > cap) {
      throw std::runtime_error("derivation is not nilpotent on " + a.to_string() + " within " +
                               std::to_string(cap) + " iterations");
    }
    term *= Scalar(mpq_class(1, k));
    result += term;
  }
}

HInvariants h_invariants(const Poly& h) {
  if (h.is_zero()) throw std::domain_error("h_invariants requires h != 0");
  HInvariants inv;
  inv.gcd = gcd(h, h.derivative());
  inv.pi_h = exact_div(h, inv.gcd).monic();
  if (h.modulus() != 0) {
    for (const auto& [factor, mult] : factor_fp(h)) {
      auto [it, inserted] = inv.multiplicity_profile.try_emplace(mult, factor);
      if (!inserted) it->second = it->second * factor;
    }
  } else {
    for (const auto& [mult, part] : squarefree_decomposition(h)) inv.multiplicity_profile[mult] = part;
  }
  return inv;
}

bool verify_ah_isomorphism(const Poly& h, const Poly& g, const Scalar& alpha, const Scalar& beta,
                           const Scalar& nu) {
  if (alpha.is_zero() || nu.is_zero()) return false;
  return g == nu * h.compose(Poly{beta, alpha});
}

}  // namespace weylcomb
