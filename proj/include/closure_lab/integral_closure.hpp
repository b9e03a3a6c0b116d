#pragma once

/// Integral closure: Newton polyhedra for monomial ideals of polynomial rings,
/// componentwise closure on Stanley-Reisner rings, truncations of reduced
/// rings, and the Rees multiplicity criterion elsewhere.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "closure_lab/components.hpp"
#include "closure_lab/multiplicity.hpp"
#include "closure_lab/newton.hpp"

namespace closure_lab {

namespace detail {

template <CoefficientField F>
bool generated_by_monomials(const Ideal<F>& a) {
  return std::all_of(a.generators().begin(), a.generators().end(), [](const auto& g) { return g.is_monomial(); });
}

/// Presenting ideal of a toric ring: every basis element a binomial.
template <CoefficientField F>
bool toric_presentation(const Ring<F>& ring) {
  if (!ring.known_domain()) return false;
  return std::all_of(ring.basis().elements().begin(), ring.basis().elements().end(),
                     [](const auto& g) { return g.size() <= 2; });
}

/// Monomials of weighted degree in [lo, hi].
inline std::vector<Monomial> monomials_in_degrees(const MonomialOrder& order, std::size_t nvars, long long lo,
                                                  long long hi) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t v, long long deg) -> void {
    if (v == nvars) {
      if (deg >= lo) out.push_back(m);
      return;
    }
    const long long w = order.weights()[v];
    for (int e = 0; deg + e * w <= hi; ++e) {
      m.set(v, e);
      self(self, v + 1, deg + e * w);
    }
    m.set(v, 0);
  };
  rec(rec, 0, 0);
  return out;
}

/// Homogeneous components of f.
template <CoefficientField F>
std::vector<Polynomial<F>> homogeneous_parts(const Polynomial<F>& f) {
  std::map<long long, std::vector<Term<F>>> parts;
  for (const auto& t : f.terms()) parts[f.ring().order().degree(t.monomial)].push_back(t);
  std::vector<Polynomial<F>> out;
  for (auto& [deg, terms] : parts) out.emplace_back(f.ring_ptr(), std::move(terms));
  return out;
}

}  // namespace detail

/// Closure of a monomial ideal of a polynomial ring via its Newton polyhedron.
template <CoefficientField F>
ClosureResult<F> monomial_integral_closure(const Ideal<F>& a) {
  if (!a.ring().is_polynomial_ring()) {
    throw UnsupportedError("monomial closure needs a polynomial ring; use the Stanley-Reisner closure for quotients");
  }
  if (!a.is_monomial()) throw UnsupportedError("unsupported: integral closure of a non-monomial ideal");
  const std::size_t n = a.ring().nvars();
  std::vector<ExponentVector> points;
  for (const auto& m : a.leading_monomials()) {
    auto e = m.exponents();
    points.emplace_back(e.begin(), e.end());
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& v : newton_closure(points, n)) {
    Monomial m(n);
    for (std::size_t j = 0; j < n; ++j) m.set(j, v[j]);
    gens.push_back(a.ring().ambient().monomial(m));
  }
  return {Ideal<F>(a.ring_ptr(), std::move(gens)), ClosureMethod::newton, {}};
}

/// Intersection over the minimal primes P of J of the preimages of the
/// closure of A (R/P); the components are polynomial rings.
template <CoefficientField F>
ClosureResult<F> stanley_reisner_closure(const Ideal<F>& a) {
  if (!a.ring().is_squarefree_monomial()) {
    throw UnsupportedError("Stanley-Reisner closure needs a squarefree monomial presenting ideal");
  }
  if (!a.is_monomial()) throw UnsupportedError("unsupported: integral closure of a non-monomial ideal");
  ClosureDiagnostics diag;
  std::optional<Ideal<F>> result;
  for (const auto& c : stanley_reisner_components(a.ring())) {
    auto local = monomial_integral_closure(c.project(a)).closure;
    diag.components.push_back(c.describe(a.ring().ambient()) + ": " + local.to_string());
    Ideal<F> pulled(a.ring_ptr(), c.lift(local, a.ring().ambient_ptr()));
    result = result ? ideal_intersection(*result, pulled) : pulled;
  }
  return {std::move(*result), ClosureMethod::stanley_reisner, std::move(diag)};
}

struct ReesResult {
  bool member = false;
  bool short_circuit = false;  // f already in A
  long long e_ideal = 0;
  long long e_extended = 0;
  HypothesisStatus equidimensional = HypothesisStatus::unverified;
};

namespace detail {

template <CoefficientField F>
HypothesisStatus require_equidimensional(const Ring<F>& ring, bool assume_equidim) {
  auto verified = verified_equidimensional(ring);
  if (verified && *verified) return HypothesisStatus::verified;
  if (verified) {
    throw UnsupportedError("ring is not equidimensional, so the multiplicity criterion for integral closure does not apply");
  }
  if (!assume_equidim) {
    throw UnsupportedError("cannot verify that the ring is formally equidimensional; pass assume_equidim to assert it");
  }
  return HypothesisStatus::asserted;
}

}  // namespace detail

/// f in the integral closure of A iff e(A) = e(A + (f)). Non-homogeneous f is
/// split into homogeneous parts, since the closure of a homogeneous ideal is
/// homogeneous.
template <CoefficientField F>
ReesResult rees_membership(const Polynomial<F>& f, const Ideal<F>& a, bool assume_equidim,
                           MultiplicityOptions opts = {}) {
  if (!f.ring().same_as(a.ring().ambient())) throw UsageError("element and ideal live in different rings");
  if (!is_primary_to_maximal(a)) throw NotPrimaryError("multiplicity criterion needs an ideal primary to the maximal ideal");
  ReesResult r;
  if (a.contains(f)) {
    r.member = true;
    r.short_circuit = true;
    return r;
  }
  r.equidimensional = detail::require_equidimensional(a.ring(), assume_equidim);
  r.e_ideal = mult_hs(a, opts).value;
  r.member = true;
  for (const auto& part : detail::homogeneous_parts(f)) {
    if (a.contains(part)) continue;
    long long e = mult_hs(ideal_sum(a, Ideal<F>(a.ring_ptr(), {part})), opts).value;
    if (r.e_extended == 0 || e < r.e_extended) r.e_extended = e;
    if (e != r.e_ideal) r.member = false;
  }
  return r;
}

namespace detail {

/// A = R_{>=k} for the least degree k of a generator.
template <CoefficientField F>
bool is_truncation(const Ideal<F>& a) {
  if (a.is_unit() || a.is_zero() || !a.is_homogeneous()) return false;
  auto gens = a.minimal_generators();
  long long k = gens.front().degree();
  for (const auto& g : gens) k = std::min(k, g.degree());
  const auto& amb = a.ring().ambient();
  long long wmax = *std::max_element(amb.weights().begin(), amb.weights().end());
  std::vector<Polynomial<F>> trunc;
  for (const auto& m : monomials_in_degrees(amb.order(), amb.nvars(), k, k + wmax - 1)) trunc.push_back(amb.monomial(m));
  return Ideal<F>(a.ring_ptr(), std::move(trunc)) == a;
}

/// Standard monomials of A other than 1 that lie in the closure of A.
template <CoefficientField F>
std::vector<Polynomial<F>> rees_closure_monomials(const Ideal<F>& a, bool assume_equidim, MultiplicityOptions opts,
                                                  bool stop_at_first) {
  std::vector<Polynomial<F>> found;
  for (const auto& m : standard_monomials(a)) {
    if (m.is_one()) continue;
    auto f = a.ring().ambient().monomial(m);
    if (rees_membership(f, a, assume_equidim, opts).member) {
      found.push_back(f);
      if (stop_at_first) break;
    }
  }
  return found;
}

}  // namespace detail

/// The closure of A by the first method that applies; unsupported otherwise.
template <CoefficientField F>
ClosureResult<F> integral_closure(const Ideal<F>& a, bool assume_equidim = false, MultiplicityOptions opts = {}) {
  const auto& ring = a.ring();
  if (a.is_unit() || a == Ideal<F>::maximal(a.ring_ptr())) return {a, ClosureMethod::truncation, {}};
  if (ring.is_polynomial_ring() && a.is_monomial()) return monomial_integral_closure(a);
  if (ring.is_squarefree_monomial() && a.is_monomial()) return stanley_reisner_closure(a);
  auto reduced = verified_reduced(ring);
  if (reduced && *reduced && detail::is_truncation(a)) return {a, ClosureMethod::truncation, {}};
  if (detail::toric_presentation(ring) && detail::generated_by_monomials(a) && is_primary_to_maximal(a)) {
    // the closure of a monomial ideal of a toric ring is spanned by monomials
    auto extra = detail::rees_closure_monomials(a, assume_equidim, opts, false);
    return {ideal_sum(a, Ideal<F>(a.ring_ptr(), std::move(extra))), ClosureMethod::rees, {}};
  }
  if (is_primary_to_maximal(a)) {
    // a proper ideal whose closure holds every variable has closure m
    bool all = true;
    for (std::size_t i = 0; i < ring.nvars() && all; ++i) {
      all = rees_membership(ring.variable(i), a, assume_equidim, opts).member;
    }
    if (all) return {Ideal<F>::maximal(a.ring_ptr()), ClosureMethod::rees, {}};
  }
  throw UnsupportedError(
      "unsupported: no integral closure method for this ideal (needs a monomial ideal of a polynomial, "
      "Stanley-Reisner or toric ring, or a truncation R_{>=k} of a reduced ring)");
}

template <CoefficientField F>
struct ClosednessResult {
  bool closed = false;
  std::string method;
  std::optional<Polynomial<F>> witness;  // element of the closure outside A
};

/// Compares A with its closure. When no closure method applies, searches the
/// standard monomials of A for a Rees witness; finding none is not a proof.
template <CoefficientField F>
ClosednessResult<F> is_integrally_closed(const Ideal<F>& a, bool assume_equidim = false,
                                         MultiplicityOptions opts = {}) {
  ClosednessResult<F> r;
  if (a == Ideal<F>::maximal(a.ring_ptr())) {
    r.closed = true;
    r.method = "maximal";
    return r;
  }
  try {
    auto c = integral_closure(a, assume_equidim, opts);
    r.method = to_string(c.method);
    r.closed = (c.closure == a);
    if (!r.closed) {
      for (const auto& g : c.closure.minimal_generators()) {
        if (!a.contains(g)) {
          r.witness = g;
          break;
        }
      }
    }
    return r;
  } catch (const UnsupportedError&) {
    if (!is_primary_to_maximal(a)) throw;
  }
  auto found = detail::rees_closure_monomials(a, assume_equidim, opts, true);
  if (found.empty()) {
    throw UnsupportedError(
        "unsupported: no standard monomial of the ideal lies in its closure, but that search is only complete "
        "for monomial ideals of toric rings");
  }
  r.method = "rees-search";
  r.closed = false;
  r.witness = found.front();
  return r;
}

}  // namespace closure_lab
