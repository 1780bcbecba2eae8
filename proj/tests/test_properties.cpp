// Randomized invariant checks. Generators are hand-rolled on mt19937_64 with
// fixed seeds, so a failure reproduces on every run.

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcomb/coeff_table.hpp"
#include "weylcomb/expr.hpp"
#include "weylcomb/operator_models.hpp"
#include "weylcomb/ore_maps.hpp"
#include "weylcomb/qgha_modules.hpp"
#include "weylcomb/star.hpp"

using namespace weylcomb;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  unsigned below(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  Scalar scalar(const Ring& ring) { return ring.coerce(Scalar(integer(-4, 4))); }
  Scalar nonzero(const Ring& ring) {
    for (;;) {
      Scalar s = scalar(ring);
      if (!s.is_zero()) return s;
    }
  }
  Poly poly(const Ring& ring, unsigned max_degree) {
    std::vector<Scalar> c;
    for (unsigned i = 0, d = below(max_degree + 1); i <= d; ++i) c.push_back(scalar(ring));
    return Poly(std::move(c));
  }
  Partition partition(unsigned max_size) {
    const unsigned m = below(max_size + 1);
    const auto all = enumerate_partitions(m);
    return all[below(static_cast<unsigned>(all.size()))];
  }
  // c x^i y^j with i + j <= total.
  OreElement ore_monomial(const OreAlgebraSpec& spec, unsigned total) {
    const unsigned i = below(total + 1), j = below(total - i + 1);
    return OreElement::term(spec, Poly::monomial(nonzero(spec.ring), i), j);
  }
  OreElement ore_element(const OreAlgebraSpec& spec, unsigned terms, unsigned total) {
    OreElement e(spec);
    for (unsigned t = 0; t < terms; ++t) e += ore_monomial(spec, total);
    return e;
  }
  BiPoly bipoly(unsigned total) {
    BiPoly out;
    for (int t = 0; t < 3; ++t) {
      const unsigned i = below(total + 1), j = below(total - i + 1);
      out += BiPoly::monomial(integer(-3, 3), i, j);
    }
    return out;
  }
  std::string word(unsigned max_len) {
    std::string w;
    for (unsigned i = below(max_len + 1); i > 0; --i) w += "xyh"[below(3)];
    return w;
  }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::vector<OreAlgebraSpec> relation_families(const Ring& ring) {
  return {OreAlgebraSpec::a_h(Poly{0, 1, 1}, ring), OreAlgebraSpec::quantum_plane(3, ring),
          OreAlgebraSpec::quantum_weyl(2, ring), OreAlgebraSpec::weyl(ring)};
}

}  // namespace

TEST_CASE("partitions: shrink, covers and canonical form") {
  for (unsigned m = 0; m <= 12; ++m) {
    for (const Partition& p : enumerate_partitions(m)) {
      for (unsigned i = 1; i <= m; ++i) {
        const auto s = p.shrink(i);
        CHECK(s.has_value() == (p.multiplicity(i) > 0));
        if (!s) continue;
        CHECK(s->size() == m - 1);
        CHECK(s->multiplicity(i) == p.multiplicity(i) - 1);
      }
      for (const Partition& up : up_covers(p)) {
        const auto d = down_covers(up);
        CHECK(std::find(d.begin(), d.end(), p) != d.end());
      }
      for (const Partition& down : down_covers(p)) {
        const auto u = up_covers(down);
        CHECK(std::find(u.begin(), u.end(), p) != u.end());
      }
    }
  }
  Gen g(1);
  for (int t = 0; t < 50; ++t) {
    const Partition p = g.partition(15);
    auto parts = p.parts();
    std::shuffle(parts.begin(), parts.end(), g.rng());
    CHECK(Partition(parts) == p);
    CHECK(Partition::parse(p.to_string()) == p);
  }
}

TEST_CASE("Ore algebras: associativity on random monomials") {
  Gen g(2);
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(7)}) {
    for (const auto& spec : relation_families(ring)) {
      for (int t = 0; t < 40; ++t) {
        const auto a = g.ore_monomial(spec, 6), b = g.ore_monomial(spec, 6), c = g.ore_monomial(spec, 6);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      }
    }
  }
}

TEST_CASE("Ore algebras: generator maps satisfy the relation") {
  Gen g(3);
  const auto W = OreAlgebraSpec::weyl();
  for (int t = 0; t < 20; ++t) {
    const Poly f = g.poly(Ring::rationals(), 4);
    for (const auto& gen : {GeneratorMap::phi(f), GeneratorMap::psi(f), GeneratorMap::tau(),
                            GeneratorMap::tau_ab(g.nonzero(Ring::rationals()), g.scalar(Ring::rationals()))}) {
      const EndoSpec e = make_generator_map(gen, W);
      CHECK(e.image_y * e.image_x - e.image_x * e.image_y == OreElement::constant(W, 1));
    }
    // A_h with h = x^d: tau_{a,0} scales h by a^d.
    const auto A = OreAlgebraSpec::a_h(Poly::monomial(1, 1 + g.below(3)));
    const EndoSpec e = make_generator_map(GeneratorMap::tau_ab(g.nonzero(Ring::rationals()), 0), A);
    CHECK(satisfies_relation(e.image_x, e.image_y));
    const EndoSpec p = make_generator_map(GeneratorMap::phi(f), A);
    CHECK(satisfies_relation(p.image_x, p.image_y));
  }
}

TEST_CASE("Ore algebras: derivations obey Leibniz") {
  for (unsigned p : {2u, 3u, 5u}) {
    Gen g(100 + p);
    const auto W = OreAlgebraSpec::weyl(Ring::prime_field(p));
    const std::vector<DerivSpec> ds = {make_e_x(W), make_e_y(W), make_d_f(W, g.poly(W.ring, 3)),
                                       make_ad(g.ore_element(W, 2, 3))};
    for (const auto& d : ds) {
      for (int t = 0; t < 100; ++t) {
        const auto a = g.ore_element(W, 3, 4), b = g.ore_element(W, 3, 4);
        CHECK(derivation_apply(d, a * b) == derivation_apply(d, a) * b + a * derivation_apply(d, b));
      }
    }
  }
}

TEST_CASE("Ore algebras: exp(D_f) = phi_f") {
  Gen g(4);
  for (const Poly& h : {Poly(1), Poly{0, 1, 1}}) {
    const auto A = OreAlgebraSpec::a_h(h);
    for (int t = 0; t < 20; ++t) {
      const Poly f = g.poly(Ring::rationals(), 5);
      const auto a = g.ore_element(A, 3, 4);
      CHECK(exp_derivation(make_d_f(A, f), a) == apply_map(make_generator_map(GeneratorMap::phi(f), A), a));
    }
  }
}

TEST_CASE("star product: associativity and the bracket axioms") {
  Gen g(5);
  for (int t = 0; t < 30; ++t) {
    const Poly h = g.poly(Ring::rationals(), 3);
    const BiPoly a = g.bipoly(4), b = g.bipoly(4), c = g.bipoly(4);
    CHECK(star_product(star_product(a, b, h), c, h) == star_product(a, star_product(b, c, h), h));
  }
  for (int t = 0; t < 30; ++t) {
    const Poly h = g.poly(Ring::rationals(), 3);
    const BiPoly a = g.bipoly(3), b = g.bipoly(3), c = g.bipoly(3);
    const mpq_class s(g.integer(-5, 5), 1 + g.below(4));
    auto br = [&](const BiPoly& u, const BiPoly& v) { return semiclassical_bracket(u, v, h); };
    CHECK(br(a * s + b, c) == br(a, c) * s + br(b, c));
    CHECK(br(a, b) == -br(b, a));
    CHECK(br(a, b * c) == br(a, b) * c + b * br(a, c));
    CHECK((br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero());
  }
}

TEST_CASE("universal polynomials: shape and positivity") {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned n = 1; n <= (d == 1 ? 10u : 5u); ++n) {
      const UniversalPoly u = universal_power(n, d);
      CHECK_FALSE(shape_violation(u, n, d).has_value());
      for (const auto& [m, c] : u.terms()) {
        CHECK(c > 0);
        CHECK(m.exponent(0) == n - m.partition().length());
        CHECK(m.t_power + m.partition().size() == n * d);
      }
    }
  }
}

TEST_CASE("universal polynomials: specialization in the Weyl algebra") {
  // (h y^d)^n with y standing for d/dx, against U_{n,d} at y_i = h^(i), t = y.
  const Poly h{0, 1, 0, 1};
  const auto W = OreAlgebraSpec::weyl();
  for (unsigned d = 1; d <= 2; ++d) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::map<unsigned, Poly> values;
      Poly der = h;
      for (unsigned i = 0; i <= n * d; ++i, der = der.derivative()) values[i] = der;
      const auto spec = specialize_operator(universal_power(n, d), values);
      const OreElement direct = OreElement::term(W, h, d).pow(n);
      OreElement from_u(W);
      for (const auto& [k, p] : spec) from_u.add_term(p, k);
      CHECK(direct == from_u);
    }
  }
}

TEST_CASE("operator models") {
  for (unsigned N = 0; N <= 12; ++N) CHECK(young_commutator_check(N));
  for (const mpq_class& mu : {mpq_class(0), mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
    CHECK(witt_action_check(WittParams{mu, 20}, -1, 6).passed());
  }
}

TEST_CASE("qGHA: random specs over small primes") {
  Gen g(6);
  for (int t = 0; t < 25; ++t) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[g.below(4)];
    const Ring F = Ring::prime_field(p);
    Poly f = g.poly(F, 2);
    if (f.is_constant()) f += Poly::variable().in_ring(p);
    const QghaSpec spec(F, g.nonzero(F), f, g.poly(F, 2));
    for (const WeightCycle& c : find_cycles(spec.f, p, 16)) {
      for (unsigned i = 0; i < c.period(); ++i) CHECK(spec.f.eval(c.at(i)) == c.at(i + 1));
      for (std::uint32_t m0 = 0; m0 < p; ++m0) {
        MuData mu;
        try {
          mu = mu_data(c, spec.q, spec.g, F(m0), 64);
        } catch (const std::domain_error&) {
          continue;
        }
        for (long long i = 0; i < static_cast<long long>(mu.dimension()); ++i)
          CHECK(mu.at(i + 1) == spec.q * mu.at(i) + spec.g.eval(c.at(i)));
        WindowSequence lam{-3, {}}, mus{-3, {}};
        for (long long i = -3; i < static_cast<long long>(mu.dimension()) + 3; ++i) {
          lam.values.push_back(c.at(i));
          mus.values.push_back(mu.at(i));
        }
        CHECK(laurent_model_check(lam, mus, spec.q, spec.f, spec.g).passed());
        if (mu.dimension() > 24) continue;
        ModuleParams params;
        params.mu = mu;
        params.gamma = g.nonzero(F);
        const MatrixModule a = build_module(ModuleFamily::a, spec, params);
        CHECK(verify_module(a).all_zero());
        if (mu.has_zero()) CHECK(verify_module(build_module(ModuleFamily::b, spec, params)).all_zero());
        const IsoTransform tr{TransformKind(g.below(3)), g.nonzero(F), g.nonzero(F)};
        const MatrixModule moved = transform_module(tr, a);
        CHECK(moved.spec == iso_transform(tr, spec));
        CHECK(verify_module(moved).all_zero());
      }
    }
    for (std::uint32_t alpha = 0; alpha < p; ++alpha) {
      ModuleParams params;
      params.alpha = F(alpha);
      params.max_dimension = 24;
      try {
        CHECK(verify_module(build_module(ModuleFamily::c, spec, params)).all_zero());
      } catch (const std::domain_error&) {
      }
    }
  }
}

TEST_CASE("qGHA: confluence and tau inverses") {
  Gen g(7);
  const Ring F5 = Ring::prime_field(5);
  const QghaSpec spec(F5, F5(2), Poly{1, 0, 1}, Poly{0, 1});
  for (int t = 0; t < 100; ++t) {
    const auto a = normal_order_qgha(g.word(6), spec), b = normal_order_qgha(g.word(6), spec);
    const auto c = normal_order_qgha(g.word(6), spec);
    CHECK((a * b) * c == a * (b * c));
  }
  for (int t = 0; t < 20; ++t) {
    const Ring Q = Ring::rationals();
    const QghaSpec s(Q, g.nonzero(Q), g.poly(Q, 3), g.poly(Q, 3));
    const Scalar alpha = g.scalar(Q);
    const QghaSpec there = iso_transform({TransformKind::tau, alpha, 1}, s);
    CHECK(iso_transform({TransformKind::tau, -alpha, 1}, there) == s);
  }
}

TEST_CASE("parser: print-parse round trip on random elements") {
  Gen g(8);
  const auto A = OreAlgebraSpec::quantum_weyl(Scalar::parse("2/3"));
  const QghaSpec Q(Ring::rationals(), 2, Poly{1, 0, 1}, Poly{0, 1});
  for (int t = 0; t < 40; ++t) {
    const std::string once = g.ore_element(A, 4, 5).to_string();
    CHECK(parse_ore(once, A).to_string() == once);
    const std::string q = normal_order_qgha(g.word(5), Q).to_string();
    CHECK(parse_qgha(q, Q).to_string() == q);
    const std::string b = g.bipoly(4).to_string();
    CHECK(parse_bipoly(b).to_string() == b);
  }
}
