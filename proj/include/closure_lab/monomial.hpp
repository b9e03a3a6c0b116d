#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "closure_lab/errors.hpp"

namespace closure_lab {

/// Upper bound on ambient variables, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVariables = 24;

using VariableMask = std::uint32_t;
static_assert(kMaxVariables <= 32);

/// Exponent vector stored inline; no allocation per monomial.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) {
      throw UsageError("too many variables: " + std::to_string(nvars) + " (limit " + std::to_string(kMaxVariables) + ")");
    }
  }
  explicit Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e) {
    if (e < 0 || e > 0xffff) throw UsageError("exponent out of range: " + std::to_string(e));
    exps_[i] = static_cast<Exponent>(e);
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.begin() + size_, [](Exponent e) { return e == 0; });
  }

  int total_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
    return d;
  }

  long long weighted_degree(std::span<const int> weights) const {
    long long d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += static_cast<long long>(weights[i]) * exps_[i];
    return d;
  }

  /// Bit i set iff variable i occurs.
  VariableMask support() const {
    VariableMask m = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] != 0) m |= VariableMask{1} << i;
    }
    return m;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
      if (s > 0xffff) throw ArithmeticError("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(s);
    }
    return r;
  }

  /// Exact quotient; requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (divisor.exps_[i] > exps_[i]) throw ArithmeticError("monomial does not divide");
      r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
    }
    return r;
  }

  Monomial pow(int k) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.set(i, exps_[i] * k);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support() & b.support()) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }

  /// Lexicographic on exponent vectors; only for containers, not a term order.
  friend bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin(),
                                        b.exps_.begin() + b.size_);
  }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + size_}; }

  std::string to_string(std::span<const std::string> names) const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names[i];
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};

/// Weighted degree-reverse-lexicographic order, optionally refined into an
/// elimination order: monomials are first compared by their weighted degree
/// in the eliminated block, then by the weighted degrevlex order on all
/// variables.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> weights, VariableMask eliminate = 0)
      : weights_(std::move(weights)), eliminate_(eliminate) {
    for (int w : weights_) {
      if (w < 1) throw UsageError("monomial order weights must be positive");
    }
  }

  static MonomialOrder standard(std::size_t nvars) { return MonomialOrder(std::vector<int>(nvars, 1)); }

  std::span<const int> weights() const { return weights_; }
  VariableMask eliminated() const { return eliminate_; }
  std::size_t size() const { return weights_.size(); }

  long long degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (eliminate_ != 0) {
      long long ea = 0, eb = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (eliminate_ & (VariableMask{1} << i)) {
          ea += static_cast<long long>(weights_[i]) * a[i];
          eb += static_cast<long long>(weights_[i]) * b[i];
        }
      }
      if (ea != eb) return ea <=> eb;
    }
    long long da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
    for (std::size_t i = weights_.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<int> weights_;
  VariableMask eliminate_ = 0;
};

}  // namespace closure_lab
