#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closure_lab/coeffs.hpp"
#include "closure_lab/monomial.hpp"

namespace closure_lab {

template <CoefficientField F>
class Polynomial;

/// Ambient polynomial ring k[x_1..x_n] together with its monomial order.
/// Always held through shared_ptr<const>; polynomials point back at it.
template <CoefficientField F>
class PolynomialRing : public std::enable_shared_from_this<PolynomialRing<F>> {
  struct Private {};

 public:
  using Scalar = typename F::Scalar;

  PolynomialRing(Private, F field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {}

  /// Empty weights means standard grading.
  static std::shared_ptr<const PolynomialRing> make(F field, std::vector<std::string> names,
                                                    std::vector<int> weights = {}, VariableMask eliminate = 0) {
    if (names.size() > kMaxVariables) {
      throw UsageError("too many variables: " + std::to_string(names.size()));
    }
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) {
      throw UsageError("weight vector has " + std::to_string(weights.size()) + " entries for " +
                       std::to_string(names.size()) + " variables");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) throw UsageError("duplicate variable name '" + names[i] + "'");
      }
    }
    return std::make_shared<const PolynomialRing>(Private{}, std::move(field), std::move(names),
                                                  MonomialOrder(std::move(weights), eliminate));
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const int> weights() const { return order_.weights(); }
  std::size_t nvars() const { return names_.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool same_as(const PolynomialRing& o) const {
    return this == &o || (field_ == o.field_ && names_ == o.names_ && order_ == o.order_);
  }

  Polynomial<F> zero() const { return Polynomial<F>(this->shared_from_this()); }
  Polynomial<F> constant(const Scalar& c) const { return monomial(Monomial(nvars()), c); }
  Polynomial<F> one() const { return constant(field_.one()); }
  Polynomial<F> monomial(const Monomial& m, const Scalar& c) const;
  Polynomial<F> monomial(const Monomial& m) const { return monomial(m, field_.one()); }
  Polynomial<F> variable(std::size_t i) const { return monomial(Monomial::variable(nvars(), i)); }
  Polynomial<F> variable(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw UsageError("unknown variable '" + name + "'");
    return variable(*i);
  }

  std::string describe() const {
    std::string out = field_.name() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i) out += ",";
      out += names_[i];
    }
    out += "]";
    if (std::any_of(weights().begin(), weights().end(), [](int w) { return w != 1; })) {
      out += " weights (";
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights()[i]);
      }
      out += ")";
    }
    return out;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <CoefficientField F>
struct Term {
  Monomial monomial;
  typename F::Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms, strictly decreasing in the ring order.
template <CoefficientField F>
class Polynomial {
 public:
  using Scalar = typename F::Scalar;
  using Ring = PolynomialRing<F>;
  using RingPtr = std::shared_ptr<const Ring>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term<F>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial from_sorted(RingPtr ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const {
    if (!ring_) throw UsageError("polynomial without a ring");
    return *ring_;
  }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw UsageError("leading monomial of zero");
    return terms_.front().monomial;
  }
  const Scalar& leading_coefficient() const {
    if (is_zero()) throw UsageError("leading coefficient of zero");
    return terms_.front().coeff;
  }

  /// Weighted degree of the highest-degree term (-1 for zero).
  long long degree() const {
    long long d = -1;
    for (const auto& t : terms_) d = std::max(d, ring().order().degree(t.monomial));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long long d = ring().order().degree(terms_.front().monomial);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term<F>& t) { return ring().order().degree(t.monomial) == d; });
  }

  VariableMask support() const {
    VariableMask m = 0;
    for (const auto& t : terms_) m |= t.monomial.support();
    return m;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    auto inv = leading_coefficient().inverse();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * inv;
    return r;
  }

  Polynomial scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  /// c * m * this; order is multiplicative so sortedness is preserved.
  Polynomial shifted(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;
  }

  /// this - c * m * g, in one merge pass.
  Polynomial minus_shifted(const Polynomial& g, const Monomial& m, const Scalar& c) const {
    return merge(*this, g, &m, -c);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return merge(a, b, nullptr, b.field().one());
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return merge(a, b, nullptr, -b.field().one());
  }
  Polynomial operator-() const { return scaled(-field().one()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term<F>> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return Polynomial(a.ring_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    if (k < 0) throw UsageError("negative polynomial power");
    Polynomial result = ring().one();
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// Rewrites the polynomial in another ring; variable i goes to var_map[i].
  Polynomial transported(const RingPtr& target, std::span<const int> var_map) const {
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < t.monomial.size(); ++i) {
        if (t.monomial[i] == 0) continue;
        if (var_map[i] < 0) throw UsageError("variable dropped during transport occurs in polynomial");
        m.set(static_cast<std::size_t>(var_map[i]), t.monomial[i]);
      }
      out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    return a.ring().same_as(b.ring()) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const auto& names = ring().names();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      std::string c = t.coeff.to_string();
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = (c == "1");
      if (t.monomial.is_one()) {
        out += c;
      } else if (unit) {
        out += t.monomial.to_string(names);
      } else {
        out += c + "*" + t.monomial.to_string(names);
      }
    }
    return out;
  }

  const F& field() const { return ring().field(); }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ == b.ring_) return;
    if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) {
      throw UsageError("polynomials belong to different rings");
    }
  }

  // a + c * shift * b
  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Monomial* shift, const Scalar& c) {
    const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
    Polynomial r(ring);
    if (b.is_zero() || c.is_zero()) {
      r.terms_ = a.terms_;
      return r;
    }
    const auto& order = ring->order();
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Monomial mb = shift ? b.terms_[j].monomial * *shift : b.terms_[j].monomial;
      if (i == a.terms_.size()) {
        r.terms_.push_back({mb, b.terms_[j++].coeff * c});
        continue;
      }
      auto cmp = order.compare(a.terms_[i].monomial, mb);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({mb, b.terms_[j++].coeff * c});
      } else {
        auto s = a.terms_[i++].coeff + b.terms_[j++].coeff * c;
        if (!s.is_zero()) r.terms_.push_back({mb, std::move(s)});
      }
    }
    return r;
  }

  void canonicalize() {
    if (!ring_) throw UsageError("polynomial without a ring");
    const auto& order = ring_->order();
    for (const auto& t : terms_) {
      if (t.monomial.size() != ring_->nvars()) throw UsageError("monomial has wrong number of variables");
    }
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<F>& x, const Term<F>& y) { return order.compare(x.monomial, y.monomial) > 0; });
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term<F>& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term<F>> terms_;
};

template <CoefficientField F>
Polynomial<F> PolynomialRing<F>::monomial(const Monomial& m, const Scalar& c) const {
  if (m.size() != nvars()) throw UsageError("monomial has wrong number of variables");
  std::vector<Term<F>> t;
  if (!c.is_zero()) t.push_back({m, c});
  return Polynomial<F>::from_sorted(this->shared_from_this(), std::move(t));
}

}  // namespace closure_lab
