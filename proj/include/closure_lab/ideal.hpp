#pragma once

/// Ideals of R = k[x]/J, handled through their preimages in k[x].

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closure_lab/ring.hpp"

namespace closure_lab {

template <CoefficientField F>
class Ideal {
 public:
  Ideal() = default;

  /// The ideal of R generated by gens; the stored basis is that of gens + J.
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (!g.ring().same_as(ring_->ambient())) throw UsageError("generator " + g.to_string() + " is from another ring");
    }
    std::erase_if(gens_, [](const auto& g) { return g.is_zero(); });
    std::vector<Polynomial<F>> all = gens_;
    all.insert(all.end(), ring_->presenting().begin(), ring_->presenting().end());
    basis_ = groebner_basis<F>(ring_->ambient_ptr(), all);
  }

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring) {
    auto one = ring->ambient().one();
    return Ideal(std::move(ring), {one});
  }
  /// The homogeneous maximal ideal: all variables.
  static Ideal maximal(RingPtr<F> ring) {
    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
    return Ideal(std::move(ring), std::move(vars));
  }

  const RingPtr<F>& ring_ptr() const { return ring_; }
  const Ring<F>& ring() const { return *ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  const GroebnerBasis<F>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return basis_.leading_monomials(); }

  bool is_unit() const { return basis_.is_unit(); }
  bool is_zero() const { return basis_ == ring_->basis(); }
  bool is_monomial() const { return basis_.is_monomial(); }
  bool is_homogeneous() const {
    return std::all_of(basis_.elements().begin(), basis_.elements().end(),
                       [](const auto& g) { return g.is_homogeneous(); });
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f, basis_).is_zero(); }
  bool contains(const Ideal& other) const {
    check_same_ring(other);
    return std::all_of(other.basis_.elements().begin(), other.basis_.elements().end(),
                       [&](const auto& g) { return contains(g); });
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    a.check_same_ring(b);
    return a.basis_ == b.basis_;
  }

  void check_same_ring(const Ideal& other) const {
    if (ring_ != other.ring_) throw UsageError("ideals belong to different rings");
  }

  /// A small generating set modulo J, for display. Greedy by degree.
  std::vector<Polynomial<F>> minimal_generators() const {
    if (is_unit()) return {ring_->ambient().one()};
    std::vector<Polynomial<F>> candidates;
    for (const auto& g : basis_.elements()) {
      if (!normal_form(g, ring_->basis()).is_zero()) candidates.push_back(g);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    std::vector<Polynomial<F>> kept;
    GroebnerBasis<F> current = ring_->basis();
    for (const auto& g : candidates) {
      if (normal_form(g, current).is_zero()) continue;
      kept.push_back(g);
      std::vector<Polynomial<F>> all = kept;
      all.insert(all.end(), ring_->presenting().begin(), ring_->presenting().end());
      current = groebner_basis<F>(ring_->ambient_ptr(), all);
    }
    std::stable_sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return ring_->ambient().order().less(b.leading_monomial(), a.leading_monomial());
    });
    return kept;
  }

  std::string to_string() const {
    auto gens = minimal_generators();
    std::string out = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ", ";
      out += gens[i].to_string();
    }
    if (gens.empty()) out += "0";
    return out + ")";
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  GroebnerBasis<F> basis_;
};

namespace detail {

template <CoefficientField F>
void check_same(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_same_ring(b);
}

template <CoefficientField F>
void check_in_ring(const Ideal<F>& a, const Polynomial<F>& f) {
  if (!f.ring().same_as(a.ring().ambient())) throw UsageError("element " + f.to_string() + " is from another ring");
}

/// g / f for f | g, by division with a single divisor.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f) {
  std::vector<Term<F>> quotient;
  Polynomial<F> rest = g;
  while (!rest.is_zero()) {
    const auto& lt = rest.terms().front();
    if (!f.leading_monomial().divides(lt.monomial)) throw ArithmeticError("inexact polynomial division");
    Monomial m = lt.monomial / f.leading_monomial();
    auto c = lt.coeff / f.leading_coefficient();
    quotient.push_back({m, c});
    rest = rest.minus_shifted(f, m, c);
  }
  return Polynomial<F>(g.ring_ptr(), std::move(quotient));
}

/// Intersection of two ideals of the ambient polynomial ring, by eliminating
/// an auxiliary variable t from t*A + (1-t)*B.
template <CoefficientField F>
std::vector<Polynomial<F>> ambient_intersection(const typename Polynomial<F>::RingPtr& ambient,
                                                const std::vector<Polynomial<F>>& a,
                                                const std::vector<Polynomial<F>>& b) {
  const std::size_t n = ambient->nvars();
  auto names = ambient->names();
  names.push_back("@t");
  std::vector<int> weights(ambient->weights().begin(), ambient->weights().end());
  weights.push_back(1);
  auto ext = PolynomialRing<F>::make(ambient->field(), names, weights, VariableMask{1} << n);
  std::vector<int> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  auto t = ext->variable(n);
  auto one_minus_t = ext->one() - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a) gens.push_back(t * g.transported(ext, up));
  for (const auto& g : b) gens.push_back(one_minus_t * g.transported(ext, up));
  auto G = groebner_basis<F>(ext, gens);
  std::vector<int> down(n + 1);
  for (std::size_t i = 0; i < n; ++i) down[i] = static_cast<int>(i);
  down[n] = -1;
  std::vector<Polynomial<F>> out;
  for (const auto& g : G.elements()) {
    if ((g.support() & (VariableMask{1} << n)) == 0) out.push_back(g.transported(ambient, down));
  }
  return out;
}

}  // namespace detail

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same(a, b);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

/// P * A for P = A^k, multiplying the basis of P (modulo J) by the generators of A.
template <CoefficientField F>
Ideal<F> ideal_power_step(const Ideal<F>& power, const Ideal<F>& a) {
  detail::check_same(power, a);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : power.basis().elements()) {
    if (normal_form(f, a.ring().basis()).is_zero()) continue;
    for (const auto& g : a.generators()) gens.push_back(f * g);
  }
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

/// A^n; A^0 is the unit ideal.
template <CoefficientField F>
Ideal<F> ideal_power(const Ideal<F>& a, int n) {
  if (n < 0) throw UsageError("negative ideal power");
  if (n == 0) return Ideal<F>::unit(a.ring_ptr());
  Ideal<F> result = a;
  for (int k = 1; k < n; ++k) result = ideal_power_step(result, a);
  return result;
}

/// A : f = {r : r f in A}.
template <CoefficientField F>
Ideal<F> ideal_quotient(const Ideal<F>& a, const Polynomial<F>& f) {
  detail::check_in_ring(a, f);
  if (f.is_zero()) throw UsageError("quotient by the zero element");
  if (a.contains(f)) return Ideal<F>::unit(a.ring_ptr());
  const auto& basis = a.basis().elements();
  std::vector<Polynomial<F>> gens;
  if (a.is_monomial() && f.is_monomial()) {
    const auto& m = f.leading_monomial();
    for (const auto& g : basis) gens.push_back(a.ring().ambient().monomial(g.leading_monomial() / gcd(g.leading_monomial(), m)));
  } else {
    auto meet = detail::ambient_intersection<F>(a.ring().ambient_ptr(), basis, {f});
    for (const auto& g : meet) gens.push_back(detail::divide_exact(g, f));
  }
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

/// A : B = intersection of A : g over generators g of B.
template <CoefficientField F>
Ideal<F> ideal_colon(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same(a, b);
  Ideal<F> result = Ideal<F>::unit(a.ring_ptr());
  for (const auto& g : b.basis().elements()) {
    if (a.contains(g)) continue;
    result = ideal_intersection(result, ideal_quotient(a, g));
  }
  return result;
}

template <CoefficientField F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  auto meet = detail::ambient_intersection<F>(a.ring().ambient_ptr(), a.basis().elements(), b.basis().elements());
  return Ideal<F>(a.ring_ptr(), std::move(meet));
}

template <CoefficientField F>
struct Saturation {
  Ideal<F> ideal;
  /// Least s with A : f^s = A : f^(s+1).
  int exponent = 0;
};

/// A : f^infinity by iterated quotients; the chain A : f^n ascends, so the
/// first repeat is the stable value.
template <CoefficientField F>
Saturation<F> saturation(const Ideal<F>& a, const Polynomial<F>& f) {
  if (f.is_zero()) throw UsageError("saturation by the zero element");
  Ideal<F> current = a;
  int s = 0;
  while (true) {
    Ideal<F> next = ideal_quotient(current, f);
    if (next == current) return {current, s};
    current = std::move(next);
    ++s;
  }
}

/// Krull dimension of R/A, read off the leading-term ideal.
template <CoefficientField F>
int dimension(const Ideal<F>& a) {
  if (a.is_unit()) throw UsageError("dimension of zero ring (unit ideal)");
  return detail::monomial_dimension(a.leading_monomials(), a.ring().nvars());
}

template <CoefficientField F>
bool is_primary_to_maximal(const Ideal<F>& a) {
  return !a.is_unit() && dimension(a) == 0;
}

template <CoefficientField F>
std::vector<Monomial> standard_monomials(const Ideal<F>& a, std::optional<long long> bound = std::nullopt) {
  return standard_monomials(a.basis(), bound);
}

/// Length of R/A, i.e. the number of standard monomials.
template <CoefficientField F>
long long colength(const Ideal<F>& a) {
  if (a.is_unit()) return 0;
  return static_cast<long long>(standard_monomials(a.basis()).size());
}

/// Minimal primes of a monomial ideal (J included), each generated by variables.
template <CoefficientField F>
std::vector<Ideal<F>> minimal_primes_monomial(const Ideal<F>& a) {
  if (!a.is_monomial()) {
    throw UnsupportedError("unsupported: minimal primes implemented for monomial ideals only");
  }
  std::vector<Ideal<F>> out;
  if (a.is_unit()) return out;
  for (VariableMask p : minimal_prime_supports(a.leading_monomials())) {
    std::vector<Polynomial<F>> vars;
    for (std::size_t v = 0; v < a.ring().nvars(); ++v) {
      if (p & (VariableMask{1} << v)) vars.push_back(a.ring().variable(v));
    }
    out.emplace_back(a.ring_ptr(), std::move(vars));
  }
  return out;
}

/// Ideal generated by a list of elements; all must be weighted-homogeneous.
template <CoefficientField F>
Ideal<F> homogeneous_ideal(const RingPtr<F>& ring, std::vector<Polynomial<F>> gens) {
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw UsageError("generator is not weighted-homogeneous: " + g.to_string());
  }
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace closure_lab
