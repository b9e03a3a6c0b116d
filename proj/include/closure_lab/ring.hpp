#pragma once

#include <algorithm>
#include <bit>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closure_lab/groebner.hpp"

namespace closure_lab {

namespace detail {

/// Smallest set of variables meeting every support mask (minimum hitting set),
/// by branching on the first unmet mask. Sizes are tiny at desk scale.
inline void min_hitting_set(std::span<const VariableMask> masks, VariableMask chosen, int size, int& best) {
  if (size >= best) return;
  for (VariableMask m : masks) {
    if ((m & chosen) != 0) continue;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      VariableMask bit = VariableMask{1} << v;
      if (m & bit) min_hitting_set(masks, chosen | bit, size + 1, best);
    }
    return;
  }
  best = size;
}

/// All inclusion-minimal hitting sets of the masks.
inline std::vector<VariableMask> minimal_hitting_sets(std::span<const VariableMask> masks) {
  std::vector<VariableMask> found;
  std::vector<VariableMask> stack{0};
  while (!stack.empty()) {
    VariableMask chosen = stack.back();
    stack.pop_back();
    // prune: a superset of an already found cover cannot be minimal
    bool dominated = false;
    for (VariableMask f : found) {
      if ((f & chosen) == f) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    auto unmet = std::find_if(masks.begin(), masks.end(), [&](VariableMask m) { return (m & chosen) == 0; });
    if (unmet == masks.end()) {
      std::erase_if(found, [&](VariableMask f) { return (chosen & f) == chosen; });
      found.push_back(chosen);
      continue;
    }
    for (std::size_t v = kMaxVariables; v-- > 0;) {
      VariableMask bit = VariableMask{1} << v;
      if (*unmet & bit) stack.push_back(chosen | bit);
    }
  }
  // final minimality sweep (order of discovery may leave supersets behind)
  std::vector<VariableMask> minimal;
  for (VariableMask a : found) {
    bool has_subset = std::any_of(found.begin(), found.end(),
                                  [&](VariableMask b) { return b != a && (a & b) == b; });
    if (!has_subset && std::find(minimal.begin(), minimal.end(), a) == minimal.end()) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline int popcount(VariableMask m) { return std::popcount(m); }

/// Krull dimension of k[x]/(monomials) from the supports of the monomials.
inline int monomial_dimension(std::span<const Monomial> leads, std::size_t nvars) {
  std::vector<VariableMask> masks;
  for (const auto& m : leads) masks.push_back(m.support());
  int best = static_cast<int>(nvars) + 1;
  min_hitting_set(masks, 0, 0, best);
  return static_cast<int>(nvars) - best;
}

}  // namespace detail

/// R = k[x]/J for a weighted-homogeneous J. Immutable; the reduced basis of J
/// and dim R are computed on construction.
template <CoefficientField F>
class Ring {
  struct Private {};

 public:
  using Ambient = PolynomialRing<F>;
  using AmbientPtr = std::shared_ptr<const Ambient>;

  Ring(Private, AmbientPtr ambient, std::vector<Polynomial<F>> presenting, bool known_domain)
      : ambient_(std::move(ambient)), presenting_(std::move(presenting)), known_domain_(known_domain) {
    for (const auto& g : presenting_) {
      if (!g.ring().same_as(*ambient_)) throw UsageError("presenting ideal lives in a different ring");
      if (!g.is_homogeneous()) {
        throw UsageError("presenting ideal generator is not weighted-homogeneous: " + g.to_string());
      }
    }
    std::erase_if(presenting_, [](const auto& g) { return g.is_zero(); });
    basis_ = groebner_basis<F>(ambient_, presenting_);
    if (basis_.is_unit()) throw UsageError("presenting ideal is the unit ideal (zero ring)");
    dimension_ = detail::monomial_dimension(basis_.leading_monomials(), ambient_->nvars());
  }

  static std::shared_ptr<const Ring> make(AmbientPtr ambient, std::vector<Polynomial<F>> presenting = {},
                                          bool known_domain = false) {
    return std::make_shared<const Ring>(Private{}, std::move(ambient), std::move(presenting), known_domain);
  }

  /// Polynomial ring over field with the given variables and weights.
  static std::shared_ptr<const Ring> polynomial(F field, std::vector<std::string> names,
                                                std::vector<int> weights = {}) {
    return make(Ambient::make(std::move(field), std::move(names), std::move(weights)), {}, true);
  }

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const F& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<Polynomial<F>>& presenting() const { return presenting_; }
  const GroebnerBasis<F>& basis() const { return basis_; }
  int dimension() const { return dimension_; }

  bool is_polynomial_ring() const { return basis_.is_zero_ideal(); }
  /// Presenting ideal is generated by squarefree monomials (Stanley-Reisner ring).
  bool is_squarefree_monomial() const {
    for (const auto& g : basis_.elements()) {
      if (!g.is_monomial()) return false;
      const auto& m = g.leading_monomial();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 1) return false;
      }
    }
    return true;
  }
  /// Domain by construction (polynomial and toric rings).
  bool known_domain() const { return known_domain_ || is_polynomial_ring(); }

  Polynomial<F> variable(const std::string& name) const { return ambient_->variable(name); }
  Polynomial<F> variable(std::size_t i) const { return ambient_->variable(i); }

  std::string describe() const {
    std::string out = ambient_->describe();
    if (!presenting_.empty()) {
      out += "/(";
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ", ";
        out += basis_.elements()[i].to_string();
      }
      out += ")";
    }
    return out;
  }

 private:
  AmbientPtr ambient_;
  std::vector<Polynomial<F>> presenting_;
  GroebnerBasis<F> basis_;
  int dimension_ = 0;
  bool known_domain_ = false;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

/// Minimal primes of a monomial ideal, as variable masks.
inline std::vector<VariableMask> minimal_prime_supports(std::span<const Monomial> monomials) {
  std::vector<VariableMask> masks;
  for (const auto& m : monomials) masks.push_back(m.support());
  return detail::minimal_hitting_sets(masks);
}

/// Reduced rings the engine can certify: polynomial, Stanley-Reisner, toric.
template <CoefficientField F>
std::optional<bool> verified_reduced(const Ring<F>& ring) {
  if (ring.known_domain() || ring.is_squarefree_monomial()) return true;
  return std::nullopt;
}

/// Equidimensionality where it can be decided combinatorially: domains, and
/// Stanley-Reisner rings via their minimal primes.
template <CoefficientField F>
std::optional<bool> verified_equidimensional(const Ring<F>& ring) {
  if (ring.known_domain()) return true;
  if (!ring.is_squarefree_monomial()) return std::nullopt;
  auto primes = minimal_prime_supports(ring.basis().leading_monomials());
  int n = static_cast<int>(ring.nvars());
  return std::all_of(primes.begin(), primes.end(),
                     [&](VariableMask p) { return n - detail::popcount(p) == ring.dimension(); });
}

/// Formal unmixedness follows from reduced + equidimensional for these
/// finitely generated graded rings; otherwise it cannot be decided here.
template <CoefficientField F>
std::optional<bool> verified_unmixed(const Ring<F>& ring) {
  auto reduced = verified_reduced(ring);
  auto equi = verified_equidimensional(ring);
  if (reduced && *reduced && equi) return *equi;
  if (equi && !*equi) return false;
  return std::nullopt;
}

}  // namespace closure_lab
