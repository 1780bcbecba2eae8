#include "weylcomb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "weylcomb/classical.hpp"
#include "weylcomb/coeff_table.hpp"
#include "weylcomb/expr.hpp"
#include "weylcomb/operator_models.hpp"
#include "weylcomb/ore_maps.hpp"
#include "weylcomb/qgha_modules.hpp"

namespace weylcomb {

namespace {

using json = nlohmann::ordered_json;

// Raised for malformed option values that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string ring = "rat";
  std::string format = "text";
  std::uint64_t seed = 0x5eed;
};

json with_schema() {
  json j;
  j["schema"] = 1;
  return j;
}

std::vector<Scalar> parse_scalar_list(const std::string& text, const Ring& ring) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(ring.coerce(Scalar::parse(item)));
  }
  return out;
}

Scalar parse_scalar(const std::string& text, const Ring& ring) {
  try {
    return ring.coerce(Scalar::parse(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- ucoeffs

void cmd_ucoeffs(const Globals& g, unsigned n, unsigned d, bool all, bool closed_check, std::ostream& out) {
  if (n == 0 || d == 0) throw UsageError("--n and --d must be positive");
  CoeffTable table = d == 1 ? coeff_table_recurrence(n) : coeff_table_engine(n, d);
  CoeffTable shown;
  for (const auto& e : table.entries()) {
    if (all || e.n == n) shown.set(e.n, e.d, e.lambda, e.value);
  }
  if (g.format == "tsv") {
    out << shown.to_tsv();
  } else if (g.format == "json") {
    out << shown.to_json() << "\n";
  } else {
    for (const auto& e : shown.entries()) {
      out << "n=" << e.n << " k=" << e.k << " " << e.lambda.to_string() << " " << e.value.get_str() << "\n";
    }
  }
  if (closed_check) {
    if (d != 1) throw std::domain_error("the closed form covers d = 1 only");
    std::size_t count = 0;
    for (const auto& e : shown.entries()) {
      ++count;
      if (coeff_closed_form(e.n, e.lambda) != e.value) {
        throw std::domain_error("closed form disagrees at n=" + std::to_string(e.n) + " " + e.lambda.to_string());
      }
    }
    if (g.format == "text") out << "closed-form check: " << count << " entries agree\n";
  }
}

// ---------------------------------------------------------------- normal-order

struct AlgebraOptions {
  std::string algebra = "weyl";
  std::string q;
  std::string h;
  std::string f;
  std::string g;
};

OreAlgebraSpec ore_spec(const AlgebraOptions& o, const Ring& ring) {
  auto need = [](const std::string& v, const char* flag, const std::string& alg) {
    if (v.empty()) throw UsageError(std::string("algebra ") + alg + " needs " + flag);
    return v;
  };
  if (o.algebra == "weyl") return OreAlgebraSpec::weyl(ring);
  if (o.algebra == "qplane") return OreAlgebraSpec::quantum_plane(parse_scalar(need(o.q, "--q", o.algebra), ring), ring);
  if (o.algebra == "qweyl") return OreAlgebraSpec::quantum_weyl(parse_scalar(need(o.q, "--q", o.algebra), ring), ring);
  if (o.algebra == "ah") return OreAlgebraSpec::a_h(parse_poly(need(o.h, "--h", o.algebra), 'x', ring), ring);
  throw UsageError("unknown algebra '" + o.algebra + "'");
}

QghaSpec qgha_spec(const AlgebraOptions& o, const Ring& ring) {
  if (o.f.empty() || o.g.empty()) throw UsageError("qgha needs --f and --g");
  return QghaSpec(ring, o.q.empty() ? ring(1) : parse_scalar(o.q, ring), parse_poly(o.f, 'h', ring),
                  parse_poly(o.g, 'h', ring));
}

void print_ore(const Globals& g, const std::string& label, const OreElement& e, std::ostream& out) {
  if (g.format == "json") {
    json j = with_schema();
    j[label] = e.to_string();
    out << j.dump() << "\n";
  } else if (g.format == "tsv") {
    out << "x_power\ty_power\tcoefficient\n";
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
      for (int i = it->second.degree(); i >= 0; --i) {
        const Scalar& c = it->second.coeffs()[static_cast<std::size_t>(i)];
        if (!c.is_zero()) out << i << '\t' << it->first << '\t' << c.to_string() << '\n';
      }
    }
  } else {
    out << e.to_string() << "\n";
  }
}

void cmd_normal_order(const Globals& g, const AlgebraOptions& o, const std::string& text, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  if (o.algebra == "qgha") {
    const QghaElement e = parse_qgha(text, qgha_spec(o, ring));
    if (g.format == "json") {
      json j = with_schema();
      j["algebra"] = "qgha";
      j["result"] = e.to_string();
      out << j.dump() << "\n";
    } else if (g.format == "tsv") {
      out << "x_power\th_power\ty_power\tcoefficient\n";
      for (const auto& [key, p] : e.terms()) {
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
          if (!p.coeffs()[j].is_zero()) out << key.first << '\t' << j << '\t' << key.second << '\t' << p.coeffs()[j].to_string() << '\n';
        }
      }
    } else {
      out << e.to_string() << "\n";
    }
    return;
  }
  const OreElement e = parse_ore(text, ore_spec(o, ring));
  if (g.format == "json") {
    json j = with_schema();
    j["algebra"] = o.algebra;
    j["result"] = e.to_string();
    out << j.dump() << "\n";
  } else {
    print_ore(g, "result", e, out);
  }
}

// ---------------------------------------------------------------- stirling

struct StirlingOptions {
  std::string kind = "stirling2";
  unsigned n = 0;
  unsigned k = 0;
  unsigned q = 1;
  unsigned d = 1;
  std::string route = "ctable";
};

void cmd_stirling(const Globals& g, const StirlingOptions& o, std::ostream& out) {
  mpz_class value;
  if (o.kind == "generalized") {
    if (o.route == "both") {
      const mpz_class a = generalized_stirling(o.n, o.k, o.q, o.d, StirlingRoute::ctable);
      const mpz_class b = generalized_stirling(o.n, o.k, o.q, o.d, StirlingRoute::weyl);
      if (a != b) throw std::domain_error("routes disagree: ctable " + a.get_str() + ", weyl " + b.get_str());
      value = a;
    } else {
      value = generalized_stirling(o.n, o.k, o.q, o.d, o.route == "weyl" ? StirlingRoute::weyl : StirlingRoute::ctable);
    }
  } else {
    value = classical_number(parse_classical_kind(o.kind), o.n, o.k);
  }
  if (g.format == "json") {
    json j = with_schema();
    j["kind"] = o.kind;
    j["n"] = o.n;
    j["k"] = o.k;
    if (o.kind == "generalized") {
      j["q"] = o.q;
      j["d"] = o.d;
    }
    j["value"] = value.get_str();
    out << j.dump() << "\n";
  } else if (g.format == "tsv") {
    out << "kind\tn\tk\tvalue\n" << o.kind << '\t' << o.n << '\t' << o.k << '\t' << value.get_str() << '\n';
  } else {
    out << value.get_str() << "\n";
  }
}

// ---------------------------------------------------------------- modp

void cmd_modp(const Globals& g, unsigned p, unsigned m, unsigned limit, std::ostream& out) {
  const ModpReport r = modp_check(p, m, limit);
  if (g.format == "json") {
    out << r.to_json() << "\n";
  } else if (g.format == "tsv") {
    out << "partition\tcoefficient\tresidue\n";
    for (const auto& item : r.qualifying) {
      out << item.lambda.to_string() << '\t' << item.coefficient.get_str() << '\t' << item.residue << '\n';
    }
  } else {
    out << "n = " << r.n << " = " << p << "^" << m << ", " << r.qualifying.size() << " qualifying partitions\n";
    for (const auto& item : r.qualifying) {
      out << item.lambda.to_string() << " " << item.coefficient.get_str() << " mod " << p << " = " << item.residue << "\n";
    }
    out << "all zero: " << (r.all_zero ? "yes" : "no") << "\n";
  }
}

// ---------------------------------------------------------------- ode

void cmd_ode(const Globals& g, const std::string& coeffs, unsigned N, std::ostream& out) {
  if (Ring::parse(g.ring).is_prime_field()) throw std::domain_error("the ODE solver needs characteristic 0");
  const std::vector<Scalar> y = parse_scalar_list(coeffs, Ring::rationals());
  const std::vector<Scalar> x = ode_solve(y, N);
  const std::vector<Scalar> res = ode_residual(y, x);
  const bool ok = std::all_of(res.begin(), res.end(), [](const Scalar& s) { return s.is_zero(); });
  if (g.format == "json") {
    json j = with_schema();
    j["x"] = json::array();
    for (const Scalar& v : x) j["x"].push_back(v.to_string());
    j["residual_zero"] = ok;
    out << j.dump() << "\n";
  } else if (g.format == "tsv") {
    out << "n\tx_n\n";
    for (std::size_t i = 0; i < x.size(); ++i) out << i + 1 << '\t' << x[i].to_string() << '\n';
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) out << "x_" << i + 1 << " = " << x[i].to_string() << "\n";
    out << "residual of X' - Y(X) through u^" << (N ? N - 1 : 0) << ": " << (ok ? "zero" : "NONZERO") << "\n";
  }
}

// ---------------------------------------------------------------- young, witt

void cmd_young(const Globals& g, unsigned N, std::ostream& out) {
  const YoungReport r = young_commutator_report(N);
  if (g.format == "json") {
    json j = with_schema();
    j["N"] = N;
    j["passed"] = r.passed;
    j["partitions_checked"] = r.partitions_checked;
    j["failures"] = json::array();
    for (const auto& f : r.failures) j["failures"].push_back(f.parts());
    out << j.dump() << "\n";
  } else {
    out << "(yx - xy) = 1 on partitions of size <= " << N << ": " << (r.passed ? "pass" : "FAIL") << " ("
        << r.partitions_checked << " partitions)\n";
  }
}

void cmd_witt(const Globals& g, const std::string& mu, unsigned cap, int m_min, int m_max, std::ostream& out) {
  const WittParams params{Scalar::parse(mu).rational(), cap};
  const WittReport r = witt_action_check(params, m_min, m_max);
  if (g.format == "json") {
    out << r.to_json() << "\n";
  } else {
    out << "[w_m, w_n] = (n - m) w_{m+n}: " << (r.passed() ? "pass" : "FAIL") << " (" << r.sites_checked
        << " sites checked, " << r.sites_skipped << " skipped, max residual " << r.max_residual.get_str() << ")\n";
    for (const auto& e : r.entries) out << "  " << e.site << ": " << e.residual << "\n";
  }
}

// ---------------------------------------------------------------- aut

struct AutOptions {
  AlgebraOptions algebra;
  std::string map;
  std::string derivation;
  std::string f;
  std::string a;
  std::string alpha = "1";
  std::string beta = "0";
  unsigned times = 1;
  bool exp = false;
  std::string apply;
};

void cmd_aut(const Globals& g, const AutOptions& o, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  const OreAlgebraSpec spec = ore_spec(o.algebra, ring);
  if (o.apply.empty()) throw UsageError("aut needs --apply");
  OreElement value = parse_ore(o.apply, spec);
  if (o.map.empty() == o.derivation.empty()) throw UsageError("give exactly one of --map or --derivation");
  if (!o.map.empty()) {
    GeneratorMap gen;
    if (o.map == "phi") gen = GeneratorMap::phi(parse_poly(o.f.empty() ? "0" : o.f, 'x', ring));
    else if (o.map == "psi") gen = GeneratorMap::psi(parse_poly(o.f.empty() ? "0" : o.f, 'y', ring));
    else if (o.map == "tau") gen = GeneratorMap::tau();
    else if (o.map == "tau_ab") gen = GeneratorMap::tau_ab(parse_scalar(o.alpha, ring), parse_scalar(o.beta, ring));
    else throw UsageError("unknown map '" + o.map + "'");
    const EndoSpec e = make_generator_map(gen, spec);
    for (unsigned i = 0; i < o.times; ++i) value = apply_map(e, value);
  } else {
    DerivSpec d = [&] {
      if (o.derivation == "d_f") return make_d_f(spec, parse_poly(o.f.empty() ? "0" : o.f, 'x', ring));
      if (o.derivation == "ad") {
        if (o.a.empty()) throw UsageError("ad needs --a");
        return make_ad(parse_ore(o.a, spec));
      }
      if (o.derivation == "e_x") return make_e_x(spec);
      if (o.derivation == "e_y") return make_e_y(spec);
      throw UsageError("unknown derivation '" + o.derivation + "'");
    }();
    if (o.exp) {
      value = exp_derivation(d, value);
    } else {
      for (unsigned i = 0; i < o.times; ++i) value = derivation_apply(d, value);
    }
  }
  print_ore(g, "result", value, out);
}

// ---------------------------------------------------------------- star

void cmd_star(const Globals& g, const std::string& h_text, const std::vector<std::string>& exprs, bool bracket,
              bool commutator, bool hbar_one, std::ostream& out) {
  if (Ring::parse(g.ring).is_prime_field()) throw std::domain_error("the star product needs characteristic 0");
  if (exprs.size() != 2) throw UsageError("star needs exactly two expressions");
  const Poly h = parse_poly(h_text, 'x', Ring::rationals());
  const BiPoly a = parse_bipoly(exprs[0]);
  const BiPoly b = parse_bipoly(exprs[1]);
  BiPoly r = bracket      ? semiclassical_bracket(a, b, h)
             : commutator ? star_product(a, b, h) - star_product(b, a, h)
                          : star_product(a, b, h);
  if (hbar_one) r = r.set_hbar(1);
  if (g.format == "json") {
    json j = with_schema();
    j["result"] = r.to_string();
    out << j.dump() << "\n";
  } else {
    out << r.to_string() << "\n";
  }
}

// ---------------------------------------------------------------- hinv

void cmd_hinv(const Globals& g, const std::string& h_text, std::ostream& out) {
  const HInvariants inv = h_invariants(parse_poly(h_text, 'x', Ring::parse(g.ring)));
  if (g.format == "json") {
    json j = with_schema();
    j["gcd"] = inv.gcd.to_string();
    j["pi_h"] = inv.pi_h.to_string();
    j["multiplicity_profile"] = json::object();
    for (const auto& [m, p] : inv.multiplicity_profile) j["multiplicity_profile"][std::to_string(m)] = p.to_string();
    out << j.dump() << "\n";
  } else {
    out << "gcd(h, h') = " << inv.gcd.to_string() << "\n";
    out << "pi_h = " << inv.pi_h.to_string() << "\n";
    for (const auto& [m, p] : inv.multiplicity_profile) out << "multiplicity " << m << ": " << p.to_string() << "\n";
  }
}

// ---------------------------------------------------------------- qgha

struct QghaOptions {
  AlgebraOptions algebra;
  unsigned max_period = 64;
  std::string family = "a";
  std::string lambda0 = "0";
  std::string mu0 = "0";
  std::string gamma = "1";
  std::string alpha = "0";
  unsigned n_max = 10;
  std::string kind = "tau";
  std::string a = "0";
  std::string b = "1";
};

void print_module(const Globals& g, const MatrixModule& m, std::ostream& out) {
  const bool ok = verify_module(m).all_zero();
  if (g.format == "json") {
    out << m.to_json() << "\n";
    return;
  }
  out << "family " << family_tag(m.family) << ", dimension " << m.dimension();
  if (m.mu) {
    out << ", lambda " << m.mu->cycle.to_string() << ", mu0 " << m.mu->mu0.to_string() << ", |mu| "
        << m.mu->mu_period << ", gamma " << m.gamma.to_string();
  } else if (m.family == ModuleFamily::c) {
    out << ", alpha " << m.alpha.to_string();
  }
  out << ", relations " << (ok ? "hold" : "FAIL") << "\n";
  out << "X =\n" << m.X.to_string() << "Y =\n" << m.Y.to_string() << "H =\n" << m.H.to_string();
}

void cmd_qgha_cycles(const Globals& g, const QghaOptions& o, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  if (!ring.is_prime_field()) throw std::domain_error("cycle search needs --ring fp:<p>");
  if (o.algebra.f.empty()) throw UsageError("cycles needs --f");
  const auto cycles = find_cycles(parse_poly(o.algebra.f, 'h', ring), ring.p, o.max_period);
  if (g.format == "json") {
    json j = with_schema();
    j["p"] = ring.p;
    j["cycles"] = json::array();
    for (const auto& c : cycles) {
      json vals = json::array();
      for (const auto& v : c.values) vals.push_back(v.residue());
      j["cycles"].push_back(vals);
    }
    out << j.dump() << "\n";
  } else {
    for (const auto& c : cycles) out << c.to_string() << "\n";
  }
}

void cmd_qgha_modules(const Globals& g, const QghaOptions& o, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  const QghaSpec spec = qgha_spec(o.algebra, ring);
  ModuleParams params;
  params.max_dimension = o.n_max;
  ModuleFamily family;
  if (o.family == "c") {
    family = ModuleFamily::c;
    params.alpha = parse_scalar(o.alpha, ring);
  } else if (o.family == "a" || o.family == "b") {
    family = o.family == "a" ? ModuleFamily::a : ModuleFamily::b;
    const WeightCycle cycle = cycle_from(spec.f, parse_scalar(o.lambda0, ring), o.max_period);
    params.mu = mu_data(cycle, spec.q, spec.g, parse_scalar(o.mu0, ring), std::max(1u, o.n_max));
    params.gamma = parse_scalar(o.gamma, ring);
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  print_module(g, build_module(family, spec, params), out);
}

void cmd_qgha_classify(const Globals& g, const QghaOptions& o, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  const auto modules = classify_simples(qgha_spec(o.algebra, ring), o.n_max);
  if (g.format == "json") {
    json j = with_schema();
    j["modules"] = json::array();
    for (const auto& m : modules) j["modules"].push_back(json::parse(m.to_json()));
    out << j.dump() << "\n";
    return;
  }
  if (g.format == "tsv") {
    out << "index\tfamily\tdimension\tprovenance\n";
  } else {
    out << modules.size() << " simple modules of dimension <= " << o.n_max << "\n";
  }
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const MatrixModule& m = modules[i];
    std::string prov = m.mu ? "lambda=" + m.mu->cycle.to_string() + " mu0=" + m.mu->mu0.to_string() +
                                  " gamma=" + m.gamma.to_string()
                            : "alpha=" + m.alpha.to_string();
    if (g.format == "tsv") {
      out << i << '\t' << family_tag(m.family) << '\t' << m.dimension() << '\t' << prov << '\n';
    } else {
      out << "#" << i << " family " << family_tag(m.family) << " dim " << m.dimension() << " " << prov << "\n";
    }
  }
}

void cmd_qgha_transform(const Globals& g, const QghaOptions& o, std::ostream& out) {
  const Ring ring = Ring::parse(g.ring);
  const QghaSpec spec = qgha_spec(o.algebra, ring);
  IsoTransform t;
  if (o.kind == "tau") t.kind = TransformKind::tau;
  else if (o.kind == "sigma") t.kind = TransformKind::sigma;
  else if (o.kind == "rho") t.kind = TransformKind::rho;
  else throw UsageError("unknown transform '" + o.kind + "'");
  t.a = parse_scalar(o.a, ring);
  t.b = parse_scalar(o.b, ring);
  const QghaSpec r = iso_transform(t, spec);
  if (g.format == "json") {
    json j = with_schema();
    j["q"] = r.q.to_string();
    j["f"] = r.f.to_string("h");
    j["g"] = r.g.to_string("h");
    out << j.dump() << "\n";
  } else if (g.format == "tsv") {
    out << "q\tf\tg\n" << r.q.to_string() << '\t' << r.f.to_string("h") << '\t' << r.g.to_string("h") << '\n';
  } else {
    out << "q = " << r.q.to_string() << "\nf = " << r.f.to_string("h") << "\ng = " << r.g.to_string("h") << "\n";
  }
}

void add_algebra_options(CLI::App* app, AlgebraOptions& o, bool with_algebra, bool with_fg = true) {
  if (with_algebra) {
    app->add_option("--algebra", o.algebra, "weyl, qplane, qweyl, ah or qgha")
        ->check(CLI::IsMember({"weyl", "qplane", "qweyl", "ah", "qgha"}));
  }
  app->add_option("--q", o.q, "deformation parameter q");
  app->add_option("--h", o.h, "h(x) for the algebra A_h");
  if (!with_fg) return;
  app->add_option("--f", o.f, "f(h) for qgha");
  app->add_option("--g", o.g, "g(h) for qgha");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normal ordering, universal polynomials and qGHA modules", "weylcomb"};
  app.require_subcommand(1);
  // "-h" would clash with the --h option of several subcommands.
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  Globals g;
  app.add_option("--ring", g.ring, "rat or fp:<p>")->capture_default_str();
  app.add_option("--format", g.format, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--seed", g.seed, "seed for randomized steps");

  std::function<void()> action;

  unsigned n = 0, d = 1;
  bool all = false, closed = false;
  auto* uc = app.add_subcommand("ucoeffs", "coefficients c^{n,d}_lambda of U_{n,d}");
  uc->add_option("--n", n, "row")->required();
  uc->add_option("--d", d, "power of the derivation");
  uc->add_flag("--all", all, "print rows 1..n");
  uc->add_flag("--closed-form-check", closed, "compare with the closed form (d = 1)");
  uc->callback([&] { action = [&] { cmd_ucoeffs(g, n, d, all, closed, out); }; });

  AlgebraOptions no;
  std::string no_expr;
  auto* nor = app.add_subcommand("normal-order", "normal-order an expression");
  add_algebra_options(nor, no, true);
  nor->add_option("expr", no_expr, "expression")->required();
  nor->callback([&] { action = [&] { cmd_normal_order(g, no, no_expr, out); }; });

  StirlingOptions so;
  auto* st = app.add_subcommand("stirling", "classical and generalized Stirling numbers");
  st->add_option("--kind", so.kind)->check(CLI::IsMember({"stirling1", "stirling2", "bell", "eulerian", "generalized"}));
  st->add_option("--n", so.n)->required();
  st->add_option("--k", so.k);
  st->add_option("--q", so.q);
  st->add_option("--d", so.d);
  st->add_option("--route", so.route)->check(CLI::IsMember({"ctable", "weyl", "both"}));
  st->callback([&] { action = [&] { cmd_stirling(g, so, out); }; });

  unsigned mp = 2, mm = 1, limit = 32;
  auto* mo = app.add_subcommand("modp", "c^{p^m}_lambda mod p on qualifying partitions");
  mo->add_option("--p", mp)->required();
  mo->add_option("--m", mm)->required();
  mo->add_option("--limit", limit, "largest table row allowed");
  mo->callback([&] { action = [&] { cmd_modp(g, mp, mm, limit, out); }; });

  std::string ycoeffs;
  unsigned odeN = 10;
  auto* od = app.add_subcommand("ode", "formal solution of X' = Y(X)");
  od->add_option("--y-coeffs", ycoeffs, "comma-separated y_0,y_1,...")->required();
  od->add_option("--N", odeN, "number of coefficients");
  od->callback([&] { action = [&] { cmd_ode(g, ycoeffs, odeN, out); }; });

  unsigned checkN = 12;
  auto* yo = app.add_subcommand("young", "Weyl algebra action on Young's lattice");
  yo->add_option("--check-n", checkN)->required();
  yo->callback([&] { action = [&] { cmd_young(g, checkN, out); }; });

  std::string wmu = "0";
  unsigned wcap = 20;
  int wmin = -1, wmax = 6;
  auto* wi = app.add_subcommand("witt", "Witt intermediate-series action");
  wi->add_option("--mu", wmu);
  wi->add_option("--cap", wcap);
  wi->add_option("--m-min", wmin);
  wi->add_option("--m-max", wmax);
  wi->callback([&] { action = [&] { cmd_witt(g, wmu, wcap, wmin, wmax, out); }; });

  AutOptions ao;
  auto* au = app.add_subcommand("aut", "automorphisms and derivations");
  add_algebra_options(au, ao.algebra, true, false);
  au->add_option("--map", ao.map, "phi, psi, tau or tau_ab");
  au->add_option("--derivation", ao.derivation, "d_f, ad, e_x or e_y");
  au->add_option("--f", ao.f, "polynomial for phi (in x), psi (in y) or d_f (in x)");
  au->add_option("--a", ao.a, "element for ad");
  au->add_option("--alpha", ao.alpha);
  au->add_option("--beta", ao.beta);
  au->add_option("--times", ao.times, "apply repeatedly");
  au->add_flag("--exp", ao.exp, "apply exp of the derivation");
  au->add_option("--apply", ao.apply, "element to transform")->required();
  au->callback([&] { action = [&] { cmd_aut(g, ao, out); }; });

  std::string star_h = "1";
  std::vector<std::string> star_exprs;
  bool bracket = false, commut = false, hbar_one = false;
  auto* sp = app.add_subcommand("star", "star product a * b");
  sp->add_option("--h", star_h, "h(x)");
  sp->add_flag("--bracket", bracket, "semiclassical bracket instead");
  sp->add_flag("--commutator", commut, "a*b - b*a instead");
  sp->add_flag("--hbar-one", hbar_one, "substitute hbar = 1");
  sp->add_option("exprs", star_exprs, "a b")->required()->expected(2);
  sp->callback([&] { action = [&] { cmd_star(g, star_h, star_exprs, bracket, commut, hbar_one, out); }; });

  std::string hinv_h;
  auto* hi = app.add_subcommand("hinv", "gcd(h, h'), pi_h and the multiplicity profile");
  hi->add_option("--h", hinv_h)->required();
  hi->callback([&] { action = [&] { cmd_hinv(g, hinv_h, out); }; });

  QghaOptions qo;
  auto* qg = app.add_subcommand("qgha", "quantum generalized Heisenberg algebras");
  qg->require_subcommand(1);
  auto* qc = qg->add_subcommand("cycles", "f-cycles on F_p");
  add_algebra_options(qc, qo.algebra, false);
  qc->add_option("--max-period", qo.max_period);
  qc->callback([&] { action = [&] { cmd_qgha_cycles(g, qo, out); }; });
  auto* qm = qg->add_subcommand("modules", "build one module");
  add_algebra_options(qm, qo.algebra, false);
  qm->add_option("--family", qo.family)->check(CLI::IsMember({"a", "b", "c"}));
  qm->add_option("--lambda0", qo.lambda0);
  qm->add_option("--mu0", qo.mu0);
  qm->add_option("--gamma", qo.gamma);
  qm->add_option("--alpha", qo.alpha);
  qm->add_option("--max-period", qo.max_period);
  qm->add_option("--n-max", qo.n_max);
  qm->callback([&] { action = [&] { cmd_qgha_modules(g, qo, out); }; });
  auto* ql = qg->add_subcommand("classify", "simple modules up to a dimension");
  add_algebra_options(ql, qo.algebra, false);
  ql->add_option("--n-max", qo.n_max);
  ql->callback([&] { action = [&] { cmd_qgha_classify(g, qo, out); }; });
  auto* qt = qg->add_subcommand("transform", "parameters after tau, sigma or rho");
  add_algebra_options(qt, qo.algebra, false);
  qt->add_option("--kind", qo.kind)->check(CLI::IsMember({"tau", "sigma", "rho"}));
  qt->add_option("--a", qo.a, "alpha (tau) or lambda (sigma, rho)");
  qt->add_option("--b", qo.b, "mu (rho)");
  qt->callback([&] { action = [&] { cmd_qgha_transform(g, qo, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace weylcomb
