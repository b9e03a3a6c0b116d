#pragma once

/// Equality tests between multiplicity and colength: the inequality for
/// integrally closed ideals, Cohen-Macaulayness via limit closure, the closure
/// chain J in J^lim in closure(J), and regularity.

#include <optional>
#include <string>
#include <vector>

#include "closure_lab/integral_closure.hpp"

namespace closure_lab {

struct DetectorOptions {
  MultiplicityOptions multiplicity;
  LimitOptions limit;
};

namespace detail {

inline HypothesisStatus status_of(std::optional<bool> verified, bool asserted) {
  if (verified) return *verified ? HypothesisStatus::verified : HypothesisStatus::refuted;
  return asserted ? HypothesisStatus::asserted : HypothesisStatus::unverified;
}

inline bool usable(HypothesisStatus s) { return s == HypothesisStatus::verified || s == HypothesisStatus::asserted; }

inline std::string status_detail(HypothesisStatus s, const std::string& how) {
  switch (s) {
    case HypothesisStatus::verified:
    case HypothesisStatus::refuted: return how;
    case HypothesisStatus::asserted: return "caller assertion";
    default: return "not checked and not asserted";
  }
}

inline std::string equidim_how() { return "minimal primes of a Stanley-Reisner ring, or a domain by construction"; }
inline std::string unmixed_how() { return "reduced and equidimensional"; }

template <CoefficientField F>
Report start(const std::string& check, const Ring<F>& ring, std::string input) {
  Report r;
  r.check = check;
  r.ring = ring.describe();
  r.input = std::move(input);
  return r;
}

}  // namespace detail

/// e(A) >= l(R/A) for an integrally closed A in a formally equidimensional
/// ring; a failure witnesses that the ring is not formally equidimensional.
template <CoefficientField F>
Report check_inequality(const Ideal<F>& a, bool assume_equidim = false, DetectorOptions opts = {}) {
  Report rep = detail::start("check_inequality", a.ring(), a.to_string());
  if (!is_primary_to_maximal(a)) throw NotPrimaryError("check_inequality needs an ideal primary to the maximal ideal");
  auto equi = detail::status_of(verified_equidimensional(a.ring()), assume_equidim);
  ClosednessResult<F> closed;
  try {
    closed = is_integrally_closed(a, assume_equidim, opts.multiplicity);
  } catch (const UnsupportedError& e) {
    rep.verdict = Verdict::unsupported;
    rep.reason = std::string("cannot decide integral closedness: ") + e.what();
    return rep;
  }
  if (!closed.closed) {
    throw UsageError("ideal " + a.to_string() + " is not integrally closed (" + closed.witness->to_string() +
                     " lies in its closure); pass its closure instead, see is_integrally_closed");
  }
  rep.hypothesis("integrally closed", HypothesisStatus::verified, "method: " + closed.method);
  rep.hypothesis("formally equidimensional", equi, detail::status_detail(equi, detail::equidim_how()));

  const long long e = mult_hs(a, opts.multiplicity).value;
  const long long l = colength(a);
  rep.set("e", e).set("colength", l);
  if (e >= l) {
    rep.verdict = Verdict::holds;
    rep.reason = "e >= colength";
  } else {
    rep.verdict = Verdict::fails;
    rep.reason = "hypothesis violation witnessed: e < colength for an integrally closed ideal, so the ring is not "
                 "formally equidimensional";
    if (equi == HypothesisStatus::verified) rep.reason += " (contradicts the verified hypothesis)";
  }
  return rep;
}

/// e(J) >= l(R/J^lim) for a system of parameters, with equality iff R is
/// Cohen-Macaulay (the equality direction needs R formally unmixed).
template <CoefficientField F>
Report check_cm_via_lim(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq, bool assume_unmixed = false,
                        DetectorOptions opts = {}) {
  Report rep = detail::start("check_cm_via_lim", *ring, detail::describe_sequence(seq));
  require_system_of_parameters(ring, seq);
  Ideal<F> j(ring, seq);
  const auto param = mult_param(ring, seq);
  const auto hs = mult_hs(j, opts.multiplicity);
  if (param.value != hs.value) {
    throw Error("internal invariant violated: multiplicity routes disagree (" + std::to_string(param.value) + " vs " +
                std::to_string(hs.value) + ")");
  }
  const auto lim = limit_closure(ring, seq, opts.limit);
  const long long e = param.value;
  const long long l_lim = colength(lim.closure);
  rep.set("e", e)
      .set("e_hs", hs.value)
      .set("colength", colength(j))
      .set("colength_infty", e)
      .set("colength_lim", l_lim)
      .set("lim", lim.closure.to_string())
      .set("lim_stabilized_at", static_cast<long long>(*lim.diagnostics.stabilized_at));
  if (l_lim > e) throw Error("internal invariant violated: colength of the limit closure exceeds e");

  auto equi = verified_equidimensional(*ring);
  auto unmixed = detail::status_of(verified_unmixed(*ring), assume_unmixed);
  rep.hypothesis("homomorphic image of a Cohen-Macaulay ring", HypothesisStatus::automatic,
                 "quotient of a polynomial ring");
  rep.hypothesis("formally unmixed", unmixed, detail::status_detail(unmixed, detail::unmixed_how()));
  if (e > l_lim) {
    rep.verdict = Verdict::not_cohen_macaulay;
    rep.reason = "e > colength of the limit closure";
  } else if (equi && !*equi) {
    rep.verdict = Verdict::not_cohen_macaulay;
    rep.reason = "ring is not equidimensional";
  } else if (detail::usable(unmixed)) {
    rep.verdict = Verdict::cohen_macaulay;
    rep.reason = "e = colength of the limit closure";
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "e = colength of the limit closure, but unmixedness is neither verified nor asserted";
  }
  return rep;
}

/// J in J^lim in closure(J): every basis element of J^lim is tested against
/// the closure when a closure routine applies, else by the multiplicity
/// criterion; if neither applies the closure link is skipped.
template <CoefficientField F>
Report check_chain(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq, bool assume_equidim = false,
                   DetectorOptions opts = {}) {
  Report rep = detail::start("check_chain", *ring, detail::describe_sequence(seq));
  require_system_of_parameters(ring, seq);
  Ideal<F> j(ring, seq);
  const auto lim = limit_closure(ring, seq, opts.limit).closure;
  rep.set("lim", lim.to_string());
  rep.set("colength", colength(j)).set("colength_lim", colength(lim));
  const auto lim_gens = lim.minimal_generators();

  bool ok = true;
  for (const auto& g : j.minimal_generators()) {
    if (!lim.contains(g)) {
      ok = false;
      rep.witnesses.push_back("in J, not in J^lim: " + g.to_string());
    }
  }
  rep.set("J_in_lim", ok);

  std::optional<bool> upper;
  std::string how;
  std::optional<Ideal<F>> closure;
  try {
    auto c = integral_closure(j, assume_equidim, opts.multiplicity);
    closure = c.closure;
    how = to_string(c.method);
    upper = true;
    for (const auto& g : lim_gens) {
      if (!c.closure.contains(g)) {
        *upper = false;
        rep.witnesses.push_back("in J^lim, not in the closure of J: " + g.to_string());
      }
    }
  } catch (const UnsupportedError&) {
    try {
      how = "rees";
      upper = true;
      for (const auto& g : lim_gens) {
        auto r = rees_membership(g, j, assume_equidim, opts.multiplicity);
        if (!r.member) {
          *upper = false;
          rep.witnesses.push_back("in J^lim, not in the closure of J: " + g.to_string());
        }
        if (!r.short_circuit) {
          auto status = r.equidimensional;
          if (rep.hypotheses.empty()) {
            rep.hypothesis("formally equidimensional", status, detail::status_detail(status, detail::equidim_how()));
          }
        }
      }
    } catch (const UnsupportedError& e) {
      upper.reset();
      rep.reason = std::string("closure link skipped: ") + e.what();
    }
  }
  // the closure of an m-primary ideal lies in m, so lim = m pins it down
  if (!closure && upper && *upper && lim == Ideal<F>::maximal(ring)) closure = lim;
  if (upper) rep.set("lim_in_closure", *upper).set("closure_method", how);
  if (closure) rep.set("closure", closure->to_string());

  if (!ok || (upper && !*upper)) {
    rep.verdict = Verdict::fails;
    rep.reason = "containment violated";
  } else if (!upper) {
    rep.verdict = Verdict::partial;
  } else {
    rep.verdict = Verdict::holds;
    if (closure && lim == *closure) {
      rep.reason = "lim equals the integral closure of J; this alone does not imply regularity";
    }
  }
  return rep;
}

/// e(A) = l(R/A) for an integrally closed A forces R regular when R is
/// formally unmixed; e(m) >= 2 rules regularity out.
template <CoefficientField F>
Report check_regular(const Ideal<F>& a, bool assume_unmixed = false, DetectorOptions opts = {}) {
  Report rep = detail::start("check_regular", a.ring(), a.to_string());
  if (!is_primary_to_maximal(a)) throw NotPrimaryError("check_regular needs an ideal primary to the maximal ideal");
  const bool maximal = (a == Ideal<F>::maximal(a.ring_ptr()));

  HypothesisStatus closed_status = HypothesisStatus::verified;
  std::string closed_detail = maximal ? "maximal ideal" : "";
  if (!maximal) {
    try {
      auto c = is_integrally_closed(a, assume_unmixed, opts.multiplicity);
      if (!c.closed) {
        throw UsageError("ideal " + a.to_string() + " is not integrally closed (" + c.witness->to_string() +
                         " lies in its closure)");
      }
      closed_detail = "method: " + c.method;
    } catch (const UnsupportedError& e) {
      closed_status = HypothesisStatus::unverified;
      closed_detail = e.what();
    }
  }
  auto equi = verified_equidimensional(a.ring());
  auto unmixed = detail::status_of(verified_unmixed(a.ring()), assume_unmixed);
  rep.hypothesis("integrally closed", closed_status, closed_detail);
  rep.hypothesis("formally unmixed", unmixed, detail::status_detail(unmixed, detail::unmixed_how()));
  if (assume_unmixed && unmixed == HypothesisStatus::refuted) {
    rep.hypotheses.back().detail += "; the caller assertion is overridden";
  }

  const long long e = mult_hs(a, opts.multiplicity).value;
  const long long l = colength(a);
  rep.set("e", e).set("colength", l);
  if (equi && !*equi) {
    rep.verdict = Verdict::not_regular;
    rep.reason = "ring is not equidimensional, and regular rings are domains";
  } else if (e == l) {
    if (detail::usable(unmixed) && closed_status == HypothesisStatus::verified) {
      rep.verdict = Verdict::regular;
      rep.reason = "e = colength for an integrally closed ideal";
    } else {
      rep.verdict = Verdict::inconclusive;
      rep.reason = "e = colength, but a hypothesis is neither verified nor asserted";
    }
  } else if (maximal && e >= 2) {
    rep.verdict = Verdict::not_regular;
    rep.reason = "e(m) >= 2";
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "e != colength for this ideal";
  }
  return rep;
}

}  // namespace closure_lab
