#include "weylcomb/qgha.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace weylcomb {

QghaSpec::QghaSpec(Ring r, Scalar q_, Poly f_, Poly g_)
    : ring(r), q(r.coerce(q_)), f(f_.in_ring(r.p)), g(g_.in_ring(r.p)) {
  if (q.is_zero()) throw std::domain_error("q must be nonzero");
}

QghaElement QghaElement::constant(const QghaSpec& spec, const Scalar& c) {
  return term(spec, 0, Poly(c), 0);
}

QghaElement QghaElement::generator(const QghaSpec& spec, char name) {
  switch (name) {
    case 'x': return term(spec, 1, Poly(1), 0);
    case 'y': return term(spec, 0, Poly(1), 1);
    case 'h': return term(spec, 0, Poly::variable(), 0);
    default: throw std::invalid_argument(std::string("unknown generator '") + name + "'");
  }
}

QghaElement QghaElement::term(const QghaSpec& spec, unsigned i, const Poly& p, unsigned k) {
  QghaElement e(spec);
  e.add_term(i, p, k);
  return e;
}

Poly QghaElement::coeff(unsigned i, unsigned k) const {
  auto it = terms_.find({i, k});
  return it == terms_.end() ? Poly() : it->second;
}

void QghaElement::add_term(unsigned i, const Poly& p, unsigned k) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, k});
  it->second += p.in_ring(spec_.ring.p);
  if (it->second.is_zero()) terms_.erase(it);
}

QghaElement& QghaElement::operator+=(const QghaElement& o) {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("qGHA elements belong to different algebras");
  for (const auto& [key, p] : o.terms_) add_term(key.first, p, key.second);
  return *this;
}

QghaElement& QghaElement::operator-=(const QghaElement& o) { return *this += -o; }

QghaElement& QghaElement::operator*=(const Scalar& s) {
  const Scalar c = spec_.ring.coerce(s);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

QghaElement QghaElement::operator-() const {
  QghaElement r = *this;
  for (auto& [key, p] : r.terms_) p = -p;
  return r;
}

bool operator==(const QghaElement& a, const QghaElement& b) {
  if (!(a.spec_ == b.spec_)) throw std::invalid_argument("qGHA elements belong to different algebras");
  return a.terms_ == b.terms_;
}

Poly iterate(const Poly& f, unsigned n) {
  Poly r = Poly::variable();
  for (unsigned i = 0; i < n; ++i) r = f.compose(r);
  return r;
}

namespace {

// Caches f^{oj} and G_j = sum_{m<j} q^m g(f^{o(j-1-m)}), the x^{j-1} part of y x^j.
class Commuter {
 public:
  explicit Commuter(const QghaSpec& spec) : spec_(spec) {}

  const Poly& f_iter(unsigned j) {
    while (f_iter_.size() <= j) {
      f_iter_.push_back(f_iter_.empty() ? Poly::variable().in_ring(spec_.ring.p) : spec_.f.compose(f_iter_.back()));
    }
    return f_iter_[j];
  }

  const Poly& g_sum(unsigned j) {
    // G_{j+1} = q G_j + g(f^{oj}).
    if (g_sum_.empty()) g_sum_.push_back(Poly());
    while (g_sum_.size() <= j) {
      const unsigned prev = static_cast<unsigned>(g_sum_.size()) - 1;
      g_sum_.push_back(g_sum_[prev] * spec_.q + spec_.g.compose(f_iter(prev)));
    }
    return g_sum_[j];
  }

  QghaElement left_y(const QghaElement& e) {
    QghaElement r(spec_);
    for (const auto& [key, p] : e.terms()) {
      const auto [j, l] = key;
      r.add_term(j, p.compose(spec_.f) * spec_.q.pow(j), l + 1);
      if (j > 0) r.add_term(j - 1, g_sum(j) * p, l);
    }
    return r;
  }

  // P(h) * e.
  QghaElement left_poly(const Poly& poly, const QghaElement& e) {
    QghaElement r(spec_);
    for (const auto& [key, p] : e.terms()) {
      const auto [j, l] = key;
      r.add_term(j, poly.compose(f_iter(j)) * p, l);
    }
    return r;
  }

 private:
  const QghaSpec& spec_;
  std::vector<Poly> f_iter_;
  std::vector<Poly> g_sum_;
};

}  // namespace

QghaElement operator*(const QghaElement& a, const QghaElement& b) {
  if (!(a.spec_ == b.spec_)) throw std::invalid_argument("qGHA elements belong to different algebras");
  Commuter comm(a.spec_);
  std::vector<QghaElement> y_powers{b};  // y^k * b
  QghaElement result(a.spec_);
  for (const auto& [key, p] : a.terms_) {
    const auto [i, k] = key;
    while (y_powers.size() <= k) y_powers.push_back(comm.left_y(y_powers.back()));
    for (const auto& [key2, r] : comm.left_poly(p, y_powers[k]).terms_) {
      result.add_term(key2.first + i, r, key2.second);
    }
  }
  return result;
}

QghaElement QghaElement::pow(unsigned e) const {
  QghaElement r = constant(spec_, Scalar(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string QghaElement::to_string() const {
  struct Mono {
    unsigned i, j, k;
    Scalar c;
  };
  std::vector<Mono> monos;
  for (const auto& [key, p] : terms_) {
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      if (!p.coeffs()[j].is_zero()) monos.push_back({key.first, static_cast<unsigned>(j), key.second, p.coeffs()[j]});
    }
  }
  if (monos.empty()) return "0";
  std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
    return std::tie(a.k, a.i, a.j) > std::tie(b.k, b.i, b.j);
  });
  std::ostringstream os;
  bool first = true;
  for (const Mono& m : monos) {
    std::string s = m.c.to_string();
    const bool negative = s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (s != "1" || (m.i == 0 && m.j == 0 && m.k == 0)) factors.push_back(s);
    auto power = [&factors](const char* name, unsigned e) {
      if (e == 1) factors.emplace_back(name);
      if (e > 1) factors.push_back(std::string(name) + "^" + std::to_string(e));
    };
    power("x", m.i);
    power("h", m.j);
    power("y", m.k);
    for (std::size_t t = 0; t < factors.size(); ++t) os << (t ? "*" : "") << factors[t];
  }
  return os.str();
}

QghaElement normal_order_qgha(const std::string& word, const QghaSpec& spec) {
  QghaElement r = QghaElement::constant(spec, Scalar(1));
  for (char c : word) r = r * QghaElement::generator(spec, c);
  return r;
}

namespace {

bool inversion(char a, char b) {
  return (a == 'h' && b == 'x') || (a == 'y' && b == 'h') || (a == 'y' && b == 'x');
}

void add_word(std::map<std::string, Scalar>& m, const std::string& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

QghaElement rewrite_normal_form(const std::string& word, const QghaSpec& spec, RewriteStrategy strategy) {
  for (char c : word) {
    if (c != 'x' && c != 'y' && c != 'h') throw std::invalid_argument(std::string("unknown generator '") + c + "'");
  }
  std::map<std::string, Scalar> current{{word, spec.ring(1)}};
  QghaElement result(spec);
  while (!current.empty()) {
    std::map<std::string, Scalar> next;
    for (const auto& [w, c] : current) {
      std::size_t pos = std::string::npos;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (inversion(w[i], w[i + 1])) {
          pos = i;
          if (strategy == RewriteStrategy::leftmost) break;
        }
      }
      if (pos == std::string::npos) {
        const unsigned i = static_cast<unsigned>(std::count(w.begin(), w.end(), 'x'));
        const unsigned j = static_cast<unsigned>(std::count(w.begin(), w.end(), 'h'));
        const unsigned k = static_cast<unsigned>(std::count(w.begin(), w.end(), 'y'));
        result.add_term(i, Poly::monomial(c, j), k);
        continue;
      }
      const std::string before = w.substr(0, pos);
      const std::string after = w.substr(pos + 2);
      const std::string pair = w.substr(pos, 2);
      if (pair == "yx") {
        add_word(next, before + "xy" + after, c * spec.q);
        for (std::size_t e = 0; e < spec.g.coeffs().size(); ++e) {
          add_word(next, before + std::string(e, 'h') + after, c * spec.g.coeffs()[e]);
        }
      } else {
        const bool hx = pair == "hx";
        for (std::size_t e = 0; e < spec.f.coeffs().size(); ++e) {
          const std::string hs(e, 'h');
          add_word(next, before + (hx ? "x" + hs : hs + "y") + after, c * spec.f.coeffs()[e]);
        }
      }
    }
    current = std::move(next);
  }
  return result;
}

const Scalar& WeightCycle::at(long long i) const {
  const long long m = static_cast<long long>(values.size());
  return values[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::string WeightCycle::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].to_string();
  return s + ")";
}

std::vector<WeightCycle> find_cycles(const Poly& f, std::uint32_t p, unsigned max_period) {
  if (p >= (1u << 20)) throw std::domain_error("cycle search needs p < 2^20");
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  const Poly fp = f.in_ring(p);
  std::vector<std::uint32_t> next(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    // Horner over residues.
    std::uint64_t v = 0;
    for (auto it = fp.coeffs().rbegin(); it != fp.coeffs().rend(); ++it) v = (v * a + it->residue()) % p;
    next[a] = static_cast<std::uint32_t>(v);
  }
  std::vector<std::uint8_t> state(p, 0);  // 0 unseen, 1 on current path, 2 finished
  std::vector<WeightCycle> cycles;
  std::vector<std::uint32_t> path;
  for (std::uint32_t start = 0; start < p; ++start) {
    if (state[start]) continue;
    path.clear();
    std::uint32_t a = start;
    while (!state[a]) {
      state[a] = 1;
      path.push_back(a);
      a = next[a];
    }
    if (state[a] == 1) {
      // a closes a new cycle.
      auto first = std::find(path.begin(), path.end(), a);
      std::vector<std::uint32_t> cyc(first, path.end());
      if (cyc.size() <= max_period) {
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
        WeightCycle wc;
        for (std::uint32_t v : cyc) wc.values.push_back(Scalar::mod(v, p));
        cycles.push_back(std::move(wc));
      }
    }
    for (std::uint32_t v : path) state[v] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const WeightCycle& a, const WeightCycle& b) { return a.values[0].residue() < b.values[0].residue(); });
  return cycles;
}

WeightCycle cycle_from(const Poly& f, const Scalar& lambda0, unsigned max_period) {
  WeightCycle c{{lambda0}};
  Scalar v = f.eval(lambda0);
  while (v != lambda0) {
    if (c.values.size() >= max_period) {
      throw std::domain_error(lambda0.to_string() + " is not periodic under f within " +
                              std::to_string(max_period) + " steps");
    }
    c.values.push_back(v);
    v = f.eval(v);
  }
  return c;
}

const Scalar& MuData::at(long long i) const {
  const long long m = static_cast<long long>(values.size());
  return values[static_cast<std::size_t>(((i % m) + m) % m)];
}

bool MuData::has_zero() const {
  return std::any_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_zero(); });
}

MuData mu_data(const WeightCycle& cycle, const Scalar& q, const Poly& g, const Scalar& mu0,
               unsigned max_mu_period) {
  MuData d{cycle, mu0, {}, 0};
  Scalar mu = mu0;
  const unsigned m = cycle.period();
  for (unsigned j = 1; j <= max_mu_period; ++j) {
    for (unsigned i = 0; i < m; ++i) {
      d.values.push_back(mu);
      mu = q * mu + g.eval(cycle.values[i]);
    }
    if (mu == mu0) {
      d.mu_period = j;
      return d;
    }
  }
  throw std::domain_error("mu sequence from " + mu0.to_string() + " has no period within " +
                          std::to_string(max_mu_period) + " cycle lengths");
}

}  // namespace weylcomb
