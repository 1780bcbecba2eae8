#include "weylcomb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

unsigned Partition::multiplicity(unsigned i) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
}

std::optional<Partition> Partition::shrink(unsigned i) const {
  auto it = std::find(parts_.begin(), parts_.end(), i);
  if (i == 0 || it == parts_.end()) return std::nullopt;
  // Decrementing the last part equal to i keeps the sequence weakly decreasing.
  auto last = std::find_if(it, parts_.end(), [i](unsigned p) { return p != i; }) - 1;
  Partition r = *this;
  auto pos = r.parts_.begin() + (last - parts_.begin());
  if (--*pos == 0) r.parts_.erase(pos);
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "∅") return {};
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw std::invalid_argument("partition must look like [a,b,...]: '" + text + "'");
  }
  std::vector<unsigned> parts;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad partition part '" + item + "' in '" + text + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (!body.empty() && body.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Reverse-lex: the partition with the larger first differing part sorts first.
  for (std::size_t i = 0; i < std::min(a.parts_.size(), b.parts_.size()); ++i) {
    if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
  }
  return a.parts_.size() <=> b.parts_.size();
}

namespace {

void enumerate_into(unsigned remaining, unsigned max_part, unsigned max_len,
                    std::vector<unsigned>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (prefix.size() == max_len) return;
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, max_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned m, std::optional<unsigned> max_len) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  enumerate_into(m, m, max_len.value_or(m), prefix, out);
  return out;
}

std::vector<Partition> up_covers(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i - 1] > p[i]) {
      auto parts = p;
      ++parts[i];
      out.emplace_back(std::move(parts));
    }
  }
  auto parts = p;
  parts.push_back(1);
  out.emplace_back(std::move(parts));
  return out;
}

std::vector<Partition> down_covers(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 == p.size() || p[i + 1] < p[i]) {
      auto parts = p;
      if (--parts[i] == 0) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

Scalar falling_product(const Scalar& q, const Partition& lambda) {
  Scalar r(1);
  for (unsigned part : lambda.parts()) {
    for (unsigned j = 0; j < part; ++j) r *= q - Scalar(j);
  }
  return r;
}

}  // namespace weylcomb
