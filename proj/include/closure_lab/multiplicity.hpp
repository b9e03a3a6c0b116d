#pragma once

/// Hilbert-Samuel multiplicity by two routes: the colength of the infty
/// ideal of a system of parameters, and finite differences of n -> l(R/A^n).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "closure_lab/closures.hpp"
#include "closure_lab/components.hpp"
#include "closure_lab/report.hpp"

namespace closure_lab {

enum class MultiplicityMethod { infty_colength, hs_differences, reduction };

inline std::string to_string(MultiplicityMethod m) {
  switch (m) {
    case MultiplicityMethod::infty_colength: return "infty-colength";
    case MultiplicityMethod::hs_differences: return "hs-differences";
    case MultiplicityMethod::reduction: return "reduction";
  }
  return "?";
}

struct MultiplicityResult {
  long long value = 0;
  MultiplicityMethod method = MultiplicityMethod::hs_differences;
  // hs-differences: lengths[n] = l(R/A^n) for n = 0..N; differences[k] is the
  // d-th backward difference at n = d + k
  std::vector<long long> lengths;
  std::vector<long long> differences;
  // infty-colength
  std::string infty_ideal;
  std::vector<int> saturation_exponents;
};

struct MultiplicityOptions {
  int window = 3;
  int max_n = 12;
};

/// e((x_1, ..., x_d)) as the colength of (x_1, ..., x_d)^inf.
template <CoefficientField F>
MultiplicityResult mult_param(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq) {
  require_system_of_parameters(ring, seq);
  auto inf = infty_ideal(ring, seq);
  MultiplicityResult r;
  r.method = MultiplicityMethod::infty_colength;
  r.value = colength(inf.closure);
  r.infty_ideal = inf.closure.to_string();
  r.saturation_exponents = inf.diagnostics.saturation_exponents;
  return r;
}

/// e(A) as the d-th backward difference of n -> l(R/A^n), once `window`
/// consecutive differences agree.
template <CoefficientField F>
MultiplicityResult mult_hs(const Ideal<F>& a, MultiplicityOptions opts = {}) {
  const int d = a.ring().dimension();
  if (opts.window < 1) throw UsageError("multiplicity window must be positive");
  if (opts.max_n < d + opts.window) {
    throw UsageError("max_n = " + std::to_string(opts.max_n) + " is below dim + window = " +
                     std::to_string(d + opts.window));
  }
  if (!is_primary_to_maximal(a)) throw NotPrimaryError("multiplicity needs an ideal primary to the maximal ideal");

  MultiplicityResult r;
  r.method = MultiplicityMethod::hs_differences;
  r.lengths.push_back(0);
  std::vector<long long> binom(d + 1, 1);
  for (int k = 1; k <= d; ++k) binom[k] = binom[k - 1] * (d - k + 1) / k;

  Ideal<F> power = a;
  int agreeing = 0;
  for (int n = 1; n <= opts.max_n; ++n) {
    if (n > 1) power = ideal_power_step(power, a);
    r.lengths.push_back(colength(power));
    if (n < d) continue;
    long long diff = 0;
    for (int k = 0; k <= d; ++k) diff += ((k % 2) ? -1 : 1) * binom[k] * r.lengths[n - k];
    agreeing = (!r.differences.empty() && r.differences.back() == diff) ? agreeing + 1 : 1;
    r.differences.push_back(diff);
    if (agreeing >= opts.window && diff > 0) {
      r.value = diff;
      return r;
    }
  }
  throw UnstabilizedError("multiplicity unstabilized: " + std::to_string(d) + "-th differences of l(R/A^n) did not settle for n <= " +
                              std::to_string(opts.max_n),
                          r.lengths);
}

/// e(A) = sum over top-dimensional minimal primes P of e(A (R/P)), checked on a
/// Stanley-Reisner ring where every localization R_P is a field.
template <CoefficientField F>
Report additivity_check(const Ideal<F>& a, MultiplicityOptions opts = {}) {
  Report rep;
  rep.check = "additivity";
  rep.ring = a.ring().describe();
  rep.input = a.to_string();
  if (!a.ring().is_squarefree_monomial()) {
    rep.verdict = Verdict::unsupported;
    rep.reason = "additivity is only checked on Stanley-Reisner rings";
    return rep;
  }
  const int d = a.ring().dimension();
  long long total = 0;
  for (const auto& c : stanley_reisner_components(a.ring())) {
    if (c.ring->dimension() != d) continue;
    long long e = mult_hs(c.project(a), opts).value;
    rep.witnesses.push_back("component " + c.describe(a.ring().ambient()) + ": e = " + std::to_string(e));
    total += e;
  }
  long long e = mult_hs(a, opts).value;
  rep.set("e", e).set("component_sum", total);
  rep.verdict = (e == total) ? Verdict::holds : Verdict::fails;
  rep.hypothesis("reduced", HypothesisStatus::verified, "squarefree monomial presenting ideal");
  return rep;
}

template <CoefficientField F>
struct ReductionResult {
  std::vector<Polynomial<F>> sequence;
  std::uint64_t seed = 0;
  int attempts = 0;
  long long multiplicity = 0;
};

/// d random combinations of the generators of an equigenerated ideal,
/// verified to be a system of parameters with e(sequence) = e(A).
template <CoefficientField F>
ReductionResult<F> random_reduction(const Ideal<F>& a, std::uint64_t seed, MultiplicityOptions opts = {},
                                    int max_attempts = 16) {
  const auto& ring = a.ring_ptr();
  auto gens = a.minimal_generators();
  if (gens.empty()) throw UsageError("reduction of the zero ideal");
  for (const auto& g : gens) {
    if (!g.is_homogeneous() || g.degree() != gens.front().degree()) {
      throw UsageError("random reduction needs generators of a single degree");
    }
  }
  const long long target = mult_hs(a, opts).value;
  const int d = ring->dimension();
  std::mt19937_64 gen(seed);
  const auto& field = ring->field();
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial<F>> seq;
    for (int i = 0; i < d; ++i) {
      auto f = ring->ambient().zero();
      for (const auto& g : gens) f += g.scaled(field.random_nonzero(gen, 16));
      seq.push_back(f);
    }
    if (std::any_of(seq.begin(), seq.end(), [](const auto& f) { return f.is_zero(); })) continue;
    if (!is_system_of_parameters(ring, seq)) continue;
    if (mult_param(ring, seq).value != target) continue;
    return {std::move(seq), seed, attempt, target};
  }
  throw Error("reduction not found: " + std::to_string(max_attempts) + " random draws (seed " + std::to_string(seed) +
              ") gave no system of parameters with multiplicity " + std::to_string(target));
}

}  // namespace closure_lab
