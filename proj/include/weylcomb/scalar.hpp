#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace weylcomb {

/// Exact scalar: either a rational number or a residue modulo a prime p < 2^31.
///
/// Mixed arithmetic promotes a rational operand into the prime field of the
/// other operand (its denominator must be invertible mod p). Combining two
/// different prime fields throws std::invalid_argument.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(int v) : value_(mpq_class(v)) {}
  Scalar(long v) : value_(mpq_class(v)) {}
  Scalar(long long v) : value_(mpq_class(static_cast<long>(v))) {}
  Scalar(unsigned v) : value_(mpq_class(v)) {}
  Scalar(unsigned long v) : value_(mpq_class(v)) {}
  Scalar(unsigned long long v) : value_(mpq_class(static_cast<unsigned long>(v))) {}
  Scalar(const mpz_class& v) : value_(mpq_class(v)) {}
  Scalar(mpq_class v);

  /// Residue of v in F_p.
  static Scalar mod(long long v, std::uint32_t p);
  static Scalar mod(const mpz_class& v, std::uint32_t p);

  /// 0 for rationals, p for F_p.
  std::uint32_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; throws for prime-field scalars.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws for rationals.
  std::uint64_t residue() const;

  /// Signed integer view: numerator for integral rationals, residue for F_p.
  /// Throws std::domain_error for a non-integral rational.
  mpz_class to_integer() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-3/2"; F_p residues print in [0, p).
  std::string to_string() const;
  /// Parses "a" or "a/b" as a rational.
  static Scalar parse(const std::string& text);

  /// Same value, coerced into F_p (p > 0) or kept rational (p == 0).
  Scalar in_ring(std::uint32_t p) const;

 private:
  std::uint32_t modulus_ = 0;
  std::variant<mpq_class, std::uint64_t> value_;

  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Scalar ring tag: exact rationals (p == 0) or F_p.
struct Ring {
  std::uint32_t p = 0;

  static Ring rationals() { return {}; }
  /// Validates that p is a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  /// Accepts "rat" or "fp:<p>".
  static Ring parse(const std::string& text);

  bool is_prime_field() const { return p != 0; }
  std::uint32_t characteristic() const { return p; }
  Scalar operator()(long long v) const { return coerce(Scalar(v)); }
  Scalar coerce(const Scalar& s) const { return s.in_ring(p); }
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.p == b.p; }
  friend bool operator!=(const Ring& a, const Ring& b) { return a.p != b.p; }
};

bool is_prime(std::uint64_t n);

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0, k > n or n < 0.
mpz_class binomial(long long n, long long k);
mpz_class factorial(unsigned n);

}  // namespace weylcomb
