#include "weylcomb/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace weylcomb {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(mpq_class v) : value_(std::move(v)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::mod(long long v, std::uint32_t p) {
  return mod(mpz_class(static_cast<long>(v)), p);
}

Scalar Scalar::mod(const mpz_class& v, std::uint32_t p) {
  if (p == 0) return Scalar(v);
  Scalar s;
  s.modulus_ = p;
  s.value_ = reduce(v, p);
  return s;
}

bool Scalar::is_zero() const {
  if (modulus_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw std::logic_error("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (modulus_ == 0) throw std::logic_error("scalar is not a prime-field residue");
  return std::get<std::uint64_t>(value_);
}

mpz_class Scalar::to_integer() const {
  if (modulus_ != 0) return mpz_class(static_cast<unsigned long>(residue()));
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() != 1) throw std::domain_error("scalar " + to_string() + " is not an integer");
  return q.get_num();
}

Scalar Scalar::in_ring(std::uint32_t p) const {
  if (p == modulus_) return *this;
  if (p == 0) throw std::invalid_argument("cannot lift a prime-field scalar to the rationals");
  if (modulus_ != 0) {
    throw std::invalid_argument("ring mismatch: F_" + std::to_string(modulus_) + " vs F_" +
                                std::to_string(p));
  }
  const auto& q = std::get<mpq_class>(value_);
  std::uint64_t num = reduce(q.get_num(), p);
  std::uint64_t den = reduce(q.get_den(), p);
  if (den == 0) {
    throw std::domain_error("denominator of " + to_string() + " is not invertible mod " +
                            std::to_string(p));
  }
  Scalar s;
  s.modulus_ = p;
  s.value_ = mul_mod(num, pow_mod(den, p - 2, p), p);
  return s;
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_;
  if (a.modulus_ == 0) return b.modulus_;
  if (b.modulus_ == 0) return a.modulus_;
  throw std::invalid_argument("ring mismatch: F_" + std::to_string(a.modulus_) + " vs F_" +
                              std::to_string(b.modulus_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (modulus_ == 0) return Scalar(1 / std::get<mpq_class>(value_));
  Scalar s = *this;
  s.value_ = pow_mod(std::get<std::uint64_t>(value_), modulus_ - 2, modulus_);
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (modulus_ != 0) {
    Scalar s = *this;
    s.value_ = pow_mod(std::get<std::uint64_t>(value_), e, modulus_);
    return s;
  }
  const auto& q = std::get<mpq_class>(value_);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0) {
    std::get<mpq_class>(s.value_) = -std::get<mpq_class>(value_);
  } else {
    auto r = std::get<std::uint64_t>(value_);
    s.value_ = r == 0 ? 0 : modulus_ - r;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    return *this;
  }
  if (modulus_ == 0) *this = in_ring(p);
  auto b = o.in_ring(p).residue();
  value_ = (std::get<std::uint64_t>(value_) + b) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    return *this;
  }
  if (modulus_ == 0) *this = in_ring(p);
  value_ = mul_mod(std::get<std::uint64_t>(value_), o.in_ring(p).residue(), p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  if (p == 0) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return a.in_ring(p).residue() == b.in_ring(p).residue();
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar Scalar::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
  return Scalar(q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Ring{static_cast<std::uint32_t>(p)};
}

Ring Ring::parse(const std::string& text) {
  if (text == "rat" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad ring '" + text + "'");
    }
    return prime_field(std::stoull(digits));
  }
  throw std::invalid_argument("unknown ring '" + text + "' (expected rat or fp:<p>)");
}

std::string Ring::name() const { return p == 0 ? "rat" : "fp:" + std::to_string(p); }

mpz_class binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace weylcomb
