#include "weylcomb/coeff_table.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

void CoeffTable::set(unsigned n, unsigned d, const Partition& lambda, const mpz_class& value) {
  if (value == 0) {
    values_.erase({d, n, lambda});
  } else {
    values_[{d, n, lambda}] = value;
  }
}

mpz_class CoeffTable::get(unsigned n, unsigned d, const Partition& lambda) const {
  auto it = values_.find({d, n, lambda});
  return it == values_.end() ? mpz_class(0) : it->second;
}

std::vector<CoeffTable::Entry> CoeffTable::row(unsigned n, unsigned d) const {
  std::vector<Entry> out;
  for (auto it = values_.lower_bound({d, n, Partition()});
       it != values_.end() && std::get<0>(it->first) == d && std::get<1>(it->first) == n; ++it) {
    const Partition& lambda = std::get<2>(it->first);
    out.push_back({n, d, n * d - lambda.size(), lambda, it->second});
  }
  return out;
}

std::vector<CoeffTable::Entry> CoeffTable::entries() const {
  std::vector<Entry> out;
  for (const auto& [key, v] : values_) {
    const auto& [d, n, lambda] = key;
    out.push_back({n, d, n * d - lambda.size(), lambda, v});
  }
  return out;
}

unsigned CoeffTable::max_n() const {
  unsigned m = 0;
  for (const auto& [key, v] : values_) m = std::max(m, std::get<1>(key));
  return m;
}

std::string CoeffTable::to_tsv() const {
  std::ostringstream os;
  os << "n\tk\tpartition\tcoefficient\n";
  for (const auto& e : entries()) {
    os << e.n << '\t' << e.k << '\t' << e.lambda.to_string() << '\t' << e.value.get_str() << '\n';
  }
  return os.str();
}

std::string CoeffTable::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries()) {
    j["entries"].push_back({{"n", e.n},
                            {"d", e.d},
                            {"k", e.k},
                            {"partition", e.lambda.parts()},
                            {"coefficient", e.value.get_str()}});
  }
  return j.dump();
}

CoeffTable coeff_table_recurrence(unsigned n_max) {
  CoeffTable table;
  if (n_max == 0) return table;
  std::map<Partition, mpz_class> prev{{Partition(), 1}};
  table.set(1, 1, Partition(), 1);
  for (unsigned n = 1; n < n_max; ++n) {
    // Row n+1 holds lambda with |lambda| <= n and l(lambda) <= n.
    std::map<Partition, mpz_class> cur;
    auto at = [&prev](const Partition& mu) {
      auto it = prev.find(mu);
      return it == prev.end() ? mpz_class(0) : it->second;
    };
    for (unsigned size = 0; size <= n; ++size) {
      for (const Partition& lambda : enumerate_partitions(size, n)) {
        mpz_class c = at(lambda);
        const auto& parts = lambda.parts();
        for (std::size_t idx = 0; idx < parts.size(); ++idx) {
          if (idx > 0 && parts[idx] == parts[idx - 1]) continue;
          const unsigned j = parts[idx];
          const unsigned below = j == 1 ? n - lambda.length() : lambda.multiplicity(j - 1);
          c += (below + 1) * at(*lambda.shrink(j));
        }
        if (c != 0) cur.emplace(lambda, c);
      }
    }
    for (const auto& [lambda, c] : cur) table.set(n + 1, 1, lambda, c);
    prev = std::move(cur);
  }
  return table;
}

void add_universal_row(CoeffTable& table, const UniversalPoly& u, unsigned n, unsigned d) {
  for (const auto& [m, c] : u.terms()) table.set(n, d, m.partition(), c);
}

CoeffTable coeff_table_engine(unsigned n_max, unsigned d) {
  CoeffTable table;
  for (unsigned n = 1; n <= n_max; ++n) add_universal_row(table, universal_power(n, d), n, d);
  return table;
}

namespace {

// Places the remaining parts (distinct values with multiplicities) into positions j..n-1.
void closed_form_dfs(unsigned j, unsigned n, unsigned prefix, unsigned left,
                     std::vector<std::pair<unsigned, unsigned>>& parts, const mpz_class& acc,
                     mpz_class& total) {
  if (left == 0) {
    total += acc;  // remaining binomials are C(., 0) = 1
    return;
  }
  if (j == n || n - j < left) return;
  // i_j = 0.
  closed_form_dfs(j + 1, n, prefix, left, parts, acc, total);
  const long long room = static_cast<long long>(j) - prefix;
  for (auto& [value, count] : parts) {
    if (count == 0 || static_cast<long long>(value) > room) continue;
    --count;
    closed_form_dfs(j + 1, n, prefix + value, left - 1, parts, acc * binomial(room, value), total);
    ++count;
  }
}

}  // namespace

mpz_class coeff_closed_form(unsigned n, const Partition& lambda) {
  if (n == 0) return 0;
  std::vector<std::pair<unsigned, unsigned>> parts;
  for (unsigned part : lambda.parts()) {
    if (parts.empty() || parts.back().first != part) parts.emplace_back(part, 0);
    ++parts.back().second;
  }
  mpz_class total = 0;
  closed_form_dfs(1, n, 0, lambda.length(), parts, 1, total);
  return total;
}

std::string ModpReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = p;
  j["m"] = m;
  j["n"] = n;
  j["all_zero"] = all_zero;
  j["qualifying"] = nlohmann::ordered_json::array();
  for (const auto& item : qualifying) {
    j["qualifying"].push_back({{"partition", item.lambda.parts()},
                               {"coefficient", item.coefficient.get_str()},
                               {"residue", item.residue}});
  }
  return j.dump();
}

ModpReport modp_check(unsigned p, unsigned m, unsigned table_limit) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
  if (m == 0) throw std::domain_error("m must be positive");
  unsigned long long n = 1;
  for (unsigned i = 0; i < m; ++i) {
    n *= p;
    if (n > table_limit) {
      throw std::domain_error("p^m exceeds the table limit " + std::to_string(table_limit));
    }
  }
  ModpReport report{p, m, static_cast<unsigned>(n), {}, true};
  const CoeffTable table = coeff_table_recurrence(report.n);
  for (const auto& e : table.row(report.n)) {
    const unsigned size = e.lambda.size();
    if (size == report.n - 1 || size % p == 0) continue;
    const mpz_class r = e.value % p;
    const unsigned long residue = r.get_ui();
    report.qualifying.push_back({e.lambda, e.value, residue});
    if (residue != 0) report.all_zero = false;
  }
  return report;
}

}  // namespace weylcomb
