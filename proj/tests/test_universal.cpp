#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "weylcomb/coeff_table.hpp"
#include "weylcomb/universal.hpp"

using namespace weylcomb;

namespace {

struct Term {
  long c;
  std::map<unsigned, unsigned> y;
  unsigned t;
};

UniversalPoly make(const std::vector<Term>& terms) {
  UniversalPoly u;
  for (const auto& term : terms) u.add_term(DiffMonomial{term.y, term.t}, term.c);
  return u;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoeffTable single_row(const CoeffTable& t, unsigned n) {
  CoeffTable out;
  for (const auto& e : t.row(n)) out.set(e.n, e.d, e.lambda, e.value);
  return out;
}

}  // namespace

TEST_CASE("U_1 .. U_4 as displayed") {
  CHECK(universal_power(1, 1) == make({{1, {{0, 1}}, 1}}));
  CHECK(universal_power(2, 1) == make({{1, {{0, 1}, {1, 1}}, 1}, {1, {{0, 2}}, 2}}));
  CHECK(universal_power(3, 1) ==
        make({{1, {{0, 1}, {1, 2}}, 1}, {1, {{0, 2}, {2, 1}}, 1}, {3, {{0, 2}, {1, 1}}, 2}, {1, {{0, 3}}, 3}}));
  CHECK(universal_power(4, 1) == make({{1, {{0, 4}}, 4},
                                       {6, {{0, 3}, {1, 1}}, 3},
                                       {4, {{0, 3}, {2, 1}}, 2},
                                       {7, {{0, 2}, {1, 2}}, 2},
                                       {1, {{0, 3}, {3, 1}}, 1},
                                       {4, {{0, 2}, {1, 1}, {2, 1}}, 1},
                                       {1, {{0, 1}, {1, 3}}, 1}}));
  CHECK(universal_power(2, 1).to_string() == "y0^2*t^2 + y0*y1*t");
  CHECK(universal_power(1, 2) == make({{1, {{0, 1}}, 2}}));
}

TEST_CASE("expansion agrees with the single-step commutation rule") {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned n = 1; n <= (d == 1 ? 7u : 5u); ++n) {
      const UniversalPoly u = universal_power(n, d);
      const auto ref = oracle::stepwise_power(n, d);
      CHECK(u.terms() == ref);
      CHECK_FALSE(shape_violation(u, n, d).has_value());
    }
  }
}

TEST_CASE("shape violations are reported") {
  UniversalPoly bad = universal_power(3, 1);
  bad.add_term(DiffMonomial{{{0, 1}, {4, 1}}, 1}, 2);
  CHECK(shape_violation(bad, 3, 1).has_value());
}

TEST_CASE("umbral formula") {
  for (unsigned n = 1; n <= 7; ++n) CHECK(umbral_expand(n) == universal_power(n, 1));
}

TEST_CASE("specialization reproduces (h d^d)^n on polynomials") {
  const Poly h{0, 1, 0, 1};  // x^3 + x
  for (unsigned d = 1; d <= 2; ++d) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::map<unsigned, Poly> values;
      Poly der = h;
      for (unsigned i = 0; i <= n * d; ++i) {
        values[i] = der;
        der = der.derivative();
      }
      CHECK(specialize_operator(universal_power(n, d), values) == oracle::differential_power(h, d, n));
    }
  }
}

TEST_CASE("Table 1 goldens") {
  const CoeffTable table = coeff_table_recurrence(5);
  for (unsigned n = 1; n <= 5; ++n) {
    const std::string golden = read_file(std::string(WEYLCOMB_GOLDEN_DIR) + "/ucoeffs_n" + std::to_string(n) + ".tsv");
    REQUIRE_FALSE(golden.empty());
    CHECK(single_row(table, n).to_tsv() == golden);
  }
  std::size_t count = 0;
  for (unsigned n = 1; n <= 5; ++n) count += table.row(n).size();
  CHECK(count == 26);
}

TEST_CASE("frontispiece c^6 values") {
  const CoeffTable t = coeff_table_recurrence(6);
  CHECK(t(6, Partition({3, 2})) == 15);
  CHECK(t(6, Partition({4, 1})) == 11);
  CHECK(t(6, Partition({3, 1, 1})) == 32);
  CHECK(t(6, Partition({2, 2, 1})) == 34);
  CHECK(t(6, Partition({2, 1, 1, 1})) == 26);
  CHECK(t(6, Partition({5})) == 1);
  CHECK(t(6, Partition({1, 1, 1, 1, 1})) == 1);
}

TEST_CASE("recurrence, engine, closed form and umbral agree") {
  const CoeffTable rec = coeff_table_recurrence(8);
  const CoeffTable eng = coeff_table_engine(8);
  CHECK(rec.entries().size() == eng.entries().size());
  for (const auto& e : rec.entries()) {
    CHECK(eng.get(e.n, 1, e.lambda) == e.value);
    CHECK(coeff_closed_form(e.n, e.lambda) == e.value);
  }
  CHECK(coeff_closed_form(3, Partition({1})) == 3);
  CHECK(coeff_closed_form(3, Partition({1, 1, 1})) == 0);
  for (unsigned n = 1; n <= 10; ++n) CHECK(coeff_closed_form(n, Partition()) == 1);
}

TEST_CASE("tables for d > 1 carry k = nd - |lambda|") {
  const CoeffTable t = coeff_table_engine(3, 2);
  for (const auto& e : t.entries()) CHECK(e.k + e.lambda.size() == e.n * 2);
  // (y0 t^2)^2 = y0^2 t^4 + 2 y0 y1 t^3 + y0 y2 t^2
  CHECK(t.get(2, 2, Partition({1})) == 2);
  CHECK(t.get(2, 2, Partition({2})) == 1);
}

TEST_CASE("table serialization") {
  const CoeffTable t = coeff_table_recurrence(2);
  CHECK(t.to_tsv() == "n\tk\tpartition\tcoefficient\n1\t1\t[]\t1\n2\t2\t[]\t1\n2\t1\t[1]\t1\n");
  CHECK(t.to_json().find("\"schema\":1") != std::string::npos);
}

TEST_CASE("coefficients vanish mod p at prime powers") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const ModpReport r = modp_check(p, m);
    CHECK(r.all_zero);
    if (r.n > 2) CHECK_FALSE(r.qualifying.empty());
    for (const auto& item : r.qualifying) {
      CHECK(item.lambda.size() % p != 0);
      CHECK(item.lambda.size() + 1 != r.n);
    }
  }
  // Not a prime power: c^6_(1) = 15 is odd.
  CHECK(coeff_table_recurrence(6)(6, Partition({1})) == 15);
  CHECK_THROWS_AS(modp_check(4, 1), std::domain_error);
  CHECK_THROWS_AS(modp_check(2, 6), std::domain_error);
}
