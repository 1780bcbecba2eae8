#pragma once
// Independent reference implementations for the tests. Nothing here calls the
// library's combinatorial code; only its plain data types are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "weylcomb/poly.hpp"
#include "weylcomb/universal.hpp"

namespace oracle {

using weylcomb::DiffMonomial;
using weylcomb::Poly;
using weylcomb::Scalar;

// Partitions of m as sorted multisets, found by brute force over compositions.
inline std::set<std::vector<unsigned>> partitions_bruteforce(unsigned m) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned left) {
    if (left == 0) {
      auto p = cur;
      std::sort(p.rbegin(), p.rend());
      out.insert(p);
      return;
    }
    for (unsigned a = 1; a <= left; ++a) {
      cur.push_back(a);
      rec(left - a);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

// p(m) from Euler's pentagonal number recurrence.
inline std::vector<mpz_class> partition_counts(unsigned m_max) {
  std::vector<mpz_class> p(m_max + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= m_max; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<int>(n)) break;
      const int sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= static_cast<int>(n)) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

// Eulerian numbers by counting descents over all permutations: out[d] = #perms with d descents.
inline std::vector<mpz_class> descent_counts(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<mpz_class> out(n == 0 ? 1 : n, 0);
  do {
    unsigned d = 0;
    for (unsigned i = 0; i + 1 < n; ++i) d += perm[i] > perm[i + 1];
    out[d] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Stirling numbers of the first kind (signless): permutations of n by number of cycles.
inline std::vector<mpz_class> cycle_counts(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<mpz_class> out(n + 1, 0);
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    out[cycles] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Stirling numbers of the second kind: set partitions of n by block count, via restricted growth strings.
inline std::vector<mpz_class> block_counts(unsigned n) {
  std::vector<mpz_class> out(n + 1, 0);
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      out[blocks] += 1;
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  a[0] = 0;
  rec(1, 1);
  return out;
}

// (y0 t^d)^n expanded by moving one t at a time: t y_m = y_m t + y_{m+1}.
using Expansion = std::map<DiffMonomial, mpz_class>;

inline Expansion stepwise_power(unsigned n, unsigned d) {
  Expansion cur;
  cur[DiffMonomial{}] = 1;
  for (unsigned step = 0; step < n; ++step) {
    Expansion next;
    for (const auto& [m, c] : cur) {
      // m * y0 * t^d: push m's t's through y0 one at a time, tracking the
      // index j of that factor and how many t's already sit to its right.
      std::map<std::pair<unsigned, unsigned>, mpz_class> passing;
      passing[{0, 0}] = 1;
      for (unsigned t = 0; t < m.t_power; ++t) {
        std::map<std::pair<unsigned, unsigned>, mpz_class> nxt;
        for (const auto& [key, v] : passing) {
          nxt[{key.first, key.second + 1}] += v;  // y_j t
          nxt[{key.first + 1, key.second}] += v;  // y_{j+1}
        }
        passing = std::move(nxt);
      }
      for (const auto& [key, v] : passing) {
        DiffMonomial r;
        r.y_exponents = m.y_exponents;
        r.y_exponents[key.first] += 1;
        r.t_power = key.second + d;
        next[r] += c * v;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// (h d^d)^n acting on Q[x], as coefficients P_k of d^k, by direct composition
// with the Leibniz rule d^j (p d^k) = sum_i C(j, i) p^{(i)} d^{k+j-i}.
inline std::map<unsigned, Poly> differential_power(const Poly& h, unsigned d, unsigned n) {
  std::map<unsigned, Poly> op;
  op[0] = Poly(1);
  for (unsigned step = 0; step < n; ++step) {
    std::map<unsigned, Poly> next;
    for (const auto& [k, p] : op) {
      Poly deriv = p;
      mpz_class binom = 1;
      for (unsigned i = 0; i <= d; ++i) {
        if (i > 0) {
          deriv = deriv.derivative();
          binom = binom * (d - i + 1) / i;
        }
        if (deriv.is_zero()) break;
        Poly term = h * deriv * Scalar(binom);
        next[k + d - i] += term;
      }
    }
    op.clear();
    for (auto& [k, p] : next) {
      if (!p.is_zero()) op[k] = p;
    }
  }
  return op;
}

inline Poly random_poly(std::mt19937_64& rng, unsigned max_degree, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  const unsigned dd = deg(rng);
  std::vector<Scalar> c;
  for (unsigned i = 0; i <= dd; ++i) c.emplace_back(coef(rng));
  return Poly(std::move(c));
}

}  // namespace oracle
