#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "weylcomb/partition.hpp"
#include "weylcomb/universal.hpp"

namespace weylcomb {

/// Sparse table of the coefficients c^{n,d}_lambda of y_0^{n-l(lambda)} y_lambda t^k
/// in U_{n,d}, where k = n d - |lambda|.
class CoeffTable {
 public:
  struct Entry {
    unsigned n;
    unsigned d;
    unsigned k;
    Partition lambda;
    mpz_class value;
  };

  void set(unsigned n, unsigned d, const Partition& lambda, const mpz_class& value);
  /// Zero for absent entries.
  mpz_class get(unsigned n, unsigned d, const Partition& lambda) const;
  /// Shorthand for d = 1.
  mpz_class operator()(unsigned n, const Partition& lambda) const { return get(n, 1, lambda); }

  /// All entries of row (n, d), ordered by |lambda| then reverse-lexicographically.
  std::vector<Entry> row(unsigned n, unsigned d = 1) const;
  std::vector<Entry> entries() const;
  std::size_t size() const { return values_.size(); }
  unsigned max_n() const;

  /// Columns n, k, partition, coefficient with a header line.
  std::string to_tsv() const;
  /// {"schema": 1, "entries": [{"n", "d", "k", "partition", "coefficient"}, ...]}.
  std::string to_json() const;

 private:
  std::map<std::tuple<unsigned, unsigned, Partition>, mpz_class> values_;  // (d, n, lambda)
};

/// c^{n}_lambda for 1 <= n <= n_max from c^{n+1}_lambda = c^n_lambda +
/// sum_i (m_i(lambda) + 1) c^n_{lambda[i+1]}, with m_0(lambda) = n - l(lambda).
CoeffTable coeff_table_recurrence(unsigned n_max);

/// Reads c^{n,d}_lambda off the expansion of (y_0 t^d)^n for every n <= n_max.
CoeffTable coeff_table_engine(unsigned n_max, unsigned d = 1);

/// Reads the coefficients of an already computed U_{n,d}.
void add_universal_row(CoeffTable& table, const UniversalPoly& u, unsigned n, unsigned d);

/// Sum over sequences (i_1..i_{n-1}) whose nonzero entries are the parts of lambda of
/// prod_j C(j - i_1 - ... - i_{j-1}, i_j). Zero when lambda does not fit.
mpz_class coeff_closed_form(unsigned n, const Partition& lambda);

struct ModpReport {
  unsigned p;
  unsigned m;
  unsigned n;  // p^m
  struct Item {
    Partition lambda;
    mpz_class coefficient;
    unsigned long residue;
  };
  std::vector<Item> qualifying;  // |lambda| != n-1 and p does not divide |lambda|
  bool all_zero = true;

  std::string to_json() const;
};

/// Checks c^{p^m}_lambda = 0 mod p on every qualifying lambda. Throws std::domain_error
/// when p is not prime or p^m exceeds table_limit.
ModpReport modp_check(unsigned p, unsigned m, unsigned table_limit = 32);

}  // namespace weylcomb
