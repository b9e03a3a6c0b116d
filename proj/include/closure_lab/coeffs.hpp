#pragma once

/// Exact coefficient fields: the rationals and prime fields F_p.
///
/// A field is described by a small descriptor type (RationalField,
/// PrimeField) that hands out its scalars. Everything above this layer is
/// templated on the descriptor, so mixing fields is a compile error except
/// between two prime fields with different characteristic, which is caught
/// at run time.

#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include <gmpxx.h>

#include "closure_lab/errors.hpp"

namespace closure_lab {

class Rational {
 public:
  Rational() = default;
  Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

/// Residue modulo a prime. The prime travels with the value so operands
/// from different prime fields are rejected.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint32_t prime) : value_(static_cast<std::uint32_t>(value % prime)), prime_(prime) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  ModP inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in F_" + std::to_string(prime_));
    // extended Euclid on (value, p)
    std::int64_t a = value_, b = prime_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (x0 < 0) x0 += prime_;
    return ModP(static_cast<std::uint64_t>(x0), prime_);
  }

  friend ModP operator+(const ModP& a, const ModP& b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} + b.value_, a.prime_);
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} + a.prime_ - b.value_, a.prime_);
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} * b.value_, a.prime_);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return ModP(value_ == 0 ? 0 : prime_ - value_, prime_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  friend bool operator==(const ModP& a, const ModP& b) {
    check(a, b);
    return a.value_ == b.value_;
  }

  std::string to_string() const {
    // symmetric representative reads better in printed polynomials
    if (value_ > prime_ / 2) return "-" + std::to_string(prime_ - value_);
    return std::to_string(value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

 private:
  static void check(const ModP& a, const ModP& b) {
    if (a.prime_ != b.prime_) {
      throw UsageError("mixed-field operands: F_" + std::to_string(a.prime_) + " and F_" +
                       std::to_string(b.prime_));
    }
  }

  std::uint32_t value_ = 0;
  std::uint32_t prime_ = 2;
};

struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar from_integer(long long v) const { return Rational(v); }
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const { return Rational(num, den); }
  /// Nonzero integer in [-bound, bound].
  Scalar random_nonzero(std::mt19937_64& gen, std::uint64_t bound = 1000) const {
    auto raw = static_cast<long long>(gen() % (2 * bound)) - static_cast<long long>(bound);
    return Rational(raw >= 0 ? raw + 1 : raw);
  }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline constexpr std::uint32_t kDefaultPrime = 65537;

class PrimeField {
 public:
  using Scalar = ModP;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31)) throw UsageError("prime " + std::to_string(p) + " is too large (limit 2^31)");
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not a prime");
  }

  std::uint32_t prime() const { return p_; }
  Scalar zero() const { return ModP(0, p_); }
  Scalar one() const { return ModP(1, p_); }
  Scalar from_integer(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return ModP(static_cast<std::uint64_t>(r), p_);
  }
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw ArithmeticError("denominator " + den.get_str() + " vanishes in F_" + std::to_string(p_));
    return ModP(n.get_ui(), p_) / ModP(d.get_ui(), p_);
  }
  Scalar random_nonzero(std::mt19937_64& gen, std::uint64_t = 0) const {
    return ModP(1 + gen() % (p_ - 1), p_);
  }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept CoefficientField = std::equality_comparable<F> && requires(const F& f, const typename F::Scalar& a,
                                                                   const typename F::Scalar& b, std::mt19937_64& gen) {
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.from_integer(1LL) } -> std::same_as<typename F::Scalar>;
  { f.random_nonzero(gen) } -> std::same_as<typename F::Scalar>;
  { f.name() } -> std::convertible_to<std::string>;
  { a + b } -> std::same_as<typename F::Scalar>;
  { a - b } -> std::same_as<typename F::Scalar>;
  { a * b } -> std::same_as<typename F::Scalar>;
  { a / b } -> std::same_as<typename F::Scalar>;
  { -a } -> std::same_as<typename F::Scalar>;
  { a.inverse() } -> std::same_as<typename F::Scalar>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace closure_lab
