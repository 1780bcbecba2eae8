#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcomb/scalar.hpp"

namespace weylcomb {

/// Integer partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0. Constructors sort, so equal multisets compare equal.
class Partition {
 public:
  Partition() = default;
  /// Sorts parts into weakly decreasing order; throws on a non-positive part.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to i (i >= 1).
  unsigned multiplicity(unsigned i) const;
  /// Replace one part equal to i by i-1 (dropping it when i == 1); absent if no part equals i.
  std::optional<Partition> shrink(unsigned i) const;

  /// "[2,1,1]"; the empty partition prints as "[]".
  std::string to_string() const;
  /// Accepts the bracket form, with optional whitespace.
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Total order: by size, then reverse-lexicographic on parts (larger first part first).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of m (optionally with at most max_len parts) in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(unsigned m, std::optional<unsigned> max_len = {});

/// Partitions obtained by adding one box, in order of the row that grows (new row last).
std::vector<Partition> up_covers(const Partition& lambda);
/// Partitions obtained by removing one box, in order of the row that shrinks.
std::vector<Partition> down_covers(const Partition& lambda);

/// Product over parts of the falling factorial q(q-1)...(q-part+1); 1 for the empty partition.
Scalar falling_product(const Scalar& q, const Partition& lambda);

}  // namespace weylcomb
