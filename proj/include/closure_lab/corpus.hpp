#pragma once

/// A fixed corpus of small graded rings with test ideals and systems of
/// parameters, and the property sweeps run over it.

#include <optional>
#include <string>
#include <vector>

#include "closure_lab/detectors.hpp"
#include "closure_lab/toric.hpp"

namespace closure_lab {

template <CoefficientField F>
struct CorpusEntry {
  std::string name;
  RingPtr<F> ring;
  bool polynomial = false;
  bool equidimensional = true;
  std::optional<bool> cohen_macaulay;  // ground truth where known
  std::vector<Ideal<F>> candidates;    // m-primary ideals expected to be integrally closed
  std::vector<std::vector<Polynomial<F>>> parameters;
};

namespace detail {

template <CoefficientField F>
std::vector<Ideal<F>> maximal_powers(const RingPtr<F>& ring, int top) {
  std::vector<Ideal<F>> out;
  auto m = Ideal<F>::maximal(ring);
  for (int k = 1; k <= top; ++k) out.push_back(ideal_power(m, k));
  return out;
}

template <CoefficientField F>
RingPtr<F> quotient_ring(const F& field, std::vector<std::string> names,
                         const std::vector<std::vector<std::vector<int>>>& monomials) {
  auto amb = PolynomialRing<F>::make(field, std::move(names));
  std::vector<Polynomial<F>> gens;
  for (const auto& terms : monomials) {
    // each entry is a binomial m1 - m2 or a monomial m1
    Monomial m1(amb->nvars());
    for (std::size_t i = 0; i < terms[0].size(); ++i) m1.set(i, terms[0][i]);
    auto g = amb->monomial(m1);
    if (terms.size() == 2) {
      Monomial m2(amb->nvars());
      for (std::size_t i = 0; i < terms[1].size(); ++i) m2.set(i, terms[1][i]);
      g -= amb->monomial(m2);
    }
    gens.push_back(g);
  }
  return Ring<F>::make(amb, std::move(gens));
}

}  // namespace detail

/// Rings named as in the tests: R2 = k[x,y,z]/(xy,xz), R3 = k[a,b,c,d]/(ac,ad,bc,bd),
/// R4 = k[s^4, s^3t, st^3, t^4], R5 = k[x,y,z]/(x^2 - yz) (presented torically).
template <CoefficientField F>
RingPtr<F> ring_r2(const F& field) {
  return detail::quotient_ring(field, {"x", "y", "z"}, {{{1, 1, 0}}, {{1, 0, 1}}});
}
template <CoefficientField F>
RingPtr<F> ring_r3(const F& field) {
  return detail::quotient_ring(field, {"a", "b", "c", "d"},
                               {{{1, 0, 1, 0}}, {{1, 0, 0, 1}}, {{0, 1, 1, 0}}, {{0, 1, 0, 1}}});
}
template <CoefficientField F>
RingPtr<F> ring_r4(const F& field) {
  return toric_ring<F>(field, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}, {"a", "b", "c", "d"});
}
template <CoefficientField F>
RingPtr<F> ring_r5(const F& field) {
  return toric_ring<F>(field, {{1, 1}, {2, 0}, {0, 2}}, {"x", "y", "z"});
}

template <CoefficientField F>
std::vector<CorpusEntry<F>> corpus(const F& field) {
  std::vector<CorpusEntry<F>> out;
  auto add = [&](std::string name, RingPtr<F> ring) -> CorpusEntry<F>& {
    CorpusEntry<F> e;
    e.name = std::move(name);
    e.ring = std::move(ring);
    e.polynomial = e.ring->is_polynomial_ring();
    out.push_back(std::move(e));
    return out.back();
  };
  auto ideal = [](const RingPtr<F>& r, std::vector<Polynomial<F>> g) { return Ideal<F>(r, std::move(g)); };

  {
    auto& e = add("k[x]", Ring<F>::polynomial(field, {"x"}));
    auto x = e.ring->variable("x");
    e.cohen_macaulay = true;
    e.candidates = {ideal(e.ring, {x}), ideal(e.ring, {x.pow(2)}), ideal(e.ring, {x.pow(3)})};
    e.parameters = {{x}, {x.pow(2)}};
  }
  {
    auto& e = add("k[x,y]", Ring<F>::polynomial(field, {"x", "y"}));
    auto x = e.ring->variable("x"), y = e.ring->variable("y");
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 3);
    e.candidates.push_back(ideal(e.ring, {x, y.pow(2)}));
    e.candidates.push_back(ideal(e.ring, {x.pow(2), x * y, y.pow(3)}));
    e.candidates.push_back(ideal(e.ring, {x.pow(3), x * y, y.pow(3)}));
    e.parameters = {{x, y}, {x.pow(2), y.pow(2)}, {x, y.pow(3)}, {x + y, x - y}};
  }
  {
    auto& e = add("k[x,y,z]", Ring<F>::polynomial(field, {"x", "y", "z"}));
    auto x = e.ring->variable("x"), y = e.ring->variable("y"), z = e.ring->variable("z");
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.candidates.push_back(ideal(e.ring, {x, y, z.pow(2)}));
    e.candidates.push_back(ideal(e.ring, {x, y.pow(2), y * z, z.pow(2)}));
    e.parameters = {{x, y, z}, {x.pow(2), y, z.pow(2)}};
  }
  {
    auto& e = add("k[x,y] deg(y)=2", Ring<F>::polynomial(field, {"x", "y"}, {1, 2}));
    auto x = e.ring->variable("x"), y = e.ring->variable("y");
    e.cohen_macaulay = true;
    e.candidates = {Ideal<F>::maximal(e.ring), ideal(e.ring, {x.pow(2), y}), ideal(e.ring, {x.pow(3), x * y, y.pow(2)})};
    e.parameters = {{x, y}, {x.pow(2), y}};
  }
  {
    auto& e = add("R3", ring_r3(field));
    auto a = e.ring->variable("a"), b = e.ring->variable("b"), c = e.ring->variable("c"), d = e.ring->variable("d");
    e.cohen_macaulay = false;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.candidates.push_back(ideal(e.ring, {a, b, c, d.pow(2)}));
    e.candidates.push_back(ideal(e.ring, {a.pow(2), b, c, d}));
    e.parameters = {{a + c, b + d}, {a + d, b + c}};
  }
  {
    auto& e = add("R4", ring_r4(field));
    auto a = e.ring->variable("a"), b = e.ring->variable("b"), d = e.ring->variable("d");
    e.cohen_macaulay = false;
    e.candidates = detail::maximal_powers(e.ring, 3);
    e.candidates.push_back(ideal(e.ring, {a, b, d}));
    e.parameters = {{a, d}, {d, a}, {a.pow(2), d}};
  }
  {
    auto& e = add("R5", ring_r5(field));
    auto x = e.ring->variable("x"), y = e.ring->variable("y"), z = e.ring->variable("z");
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 3);
    e.candidates.push_back(ideal(e.ring, {x, y, z.pow(2)}));
    e.parameters = {{y, z}, {z, y}, {y.pow(2), z}};
  }
  {
    // normal toric rings are Cohen-Macaulay
    auto& e = add("cubic Veronese of k[s,t]", toric_ring<F>(field, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}, {"a", "b", "c", "d"}));
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.parameters = {{e.ring->variable("a"), e.ring->variable("d")}};
  }
  {
    auto& e = add("quartic Veronese of k[s,t]",
                  toric_ring<F>(field, {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}, {"a", "b", "c", "d", "e"}));
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.parameters = {{e.ring->variable("a"), e.ring->variable("e")}};
  }
  {
    auto& e = add("quadratic Veronese of k[s,t,u]",
                  toric_ring<F>(field, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}},
                                {"a", "b", "c", "d", "e", "f"}));
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.parameters = {{e.ring->variable("a"), e.ring->variable("d"), e.ring->variable("f")}};
  }
  {
    // a hypersurface, hence Cohen-Macaulay
    auto& e = add("k[s^3, s^2t, t^3]", toric_ring<F>(field, {{3, 0}, {2, 1}, {0, 3}}, {"a", "b", "c"}));
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.parameters = {{e.ring->variable("a"), e.ring->variable("c")}};
  }
  {
    auto& e = add("k[x,y,z]/(xy)", detail::quotient_ring(field, {"x", "y", "z"}, {{{1, 1, 0}}}));
    auto x = e.ring->variable("x"), y = e.ring->variable("y"), z = e.ring->variable("z");
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.candidates.push_back(ideal(e.ring, {x, y, z.pow(2)}));
    e.parameters = {{x + y, z}};
  }
  {
    auto& e = add("k[x,y,z]/(xyz)", detail::quotient_ring(field, {"x", "y", "z"}, {{{1, 1, 1}}}));
    auto x = e.ring->variable("x"), y = e.ring->variable("y"), z = e.ring->variable("z");
    e.cohen_macaulay = true;
    e.candidates = detail::maximal_powers(e.ring, 2);
    e.candidates.push_back(ideal(e.ring, {x, y, z.pow(2)}));
    e.parameters = {{x + y, y + z}};
  }
  {
    auto& e = add("R2", ring_r2(field));
    auto x = e.ring->variable("x"), y = e.ring->variable("y"), z = e.ring->variable("z");
    e.equidimensional = false;
    e.cohen_macaulay = false;
    for (int n = 1; n <= 3; ++n) e.candidates.push_back(ideal(e.ring, {x.pow(n), y, z}));
    e.parameters = {{x + y, x + z}};
  }
  return out;
}

/// e(I) >= l(R/I) for integrally closed m-primary I over the equidimensional corpus rings.
template <CoefficientField F>
Report property_colength_bound(const std::vector<CorpusEntry<F>>& entries, MultiplicityOptions opts = {}) {
  Report rep;
  rep.check = "property: e(I) >= colength for integrally closed I";
  long long rings = 0, ideals = 0, skipped = 0, violations = 0;
  for (const auto& e : entries) {
    if (!e.equidimensional) continue;
    ++rings;
    for (const auto& a : e.candidates) {
      auto c = is_integrally_closed(a, false, opts);
      if (!c.closed) {
        ++skipped;
        rep.witnesses.push_back(e.name + " " + a.to_string() + ": not integrally closed, skipped");
        continue;
      }
      ++ideals;
      long long m = mult_hs(a, opts).value, l = colength(a);
      if (m < l) {
        ++violations;
        rep.witnesses.push_back(e.name + " " + a.to_string() + ": e = " + std::to_string(m) +
                                " < colength = " + std::to_string(l));
      }
    }
  }
  rep.set("rings", rings).set("ideals", ideals).set("skipped", skipped).set("violations", violations);
  rep.verdict = violations == 0 ? Verdict::holds : Verdict::fails;
  return rep;
}

/// For every system of parameters J: J in J^lim, l(R/J^lim) <= e(J) = l(R/J^inf)
/// with both multiplicity routes agreeing, J^lim in closure(J) where decidable,
/// and the Cohen-Macaulay verdict matching the known answer.
template <CoefficientField F>
Report property_parameter_chain(const std::vector<CorpusEntry<F>>& entries, DetectorOptions opts = {}) {
  Report rep;
  rep.check = "property: J in J^lim in closure(J), colength(J^lim) <= e(J) = colength(J^inf)";
  long long sequences = 0, failures = 0, closure_checked = 0, cm_checked = 0;
  for (const auto& e : entries) {
    for (const auto& seq : e.parameters) {
      ++sequences;
      std::string tag = e.name + " " + detail::describe_sequence(seq);
      auto fail = [&](const std::string& what) {
        ++failures;
        rep.witnesses.push_back(tag + ": " + what);
      };
      Ideal<F> j(e.ring, seq);
      auto lim = limit_closure(e.ring, seq, opts.limit).closure;
      const long long e_param = mult_param(e.ring, seq).value;
      const long long e_hs = mult_hs(j, opts.multiplicity).value;
      const long long l_lim = colength(lim);
      if (!lim.contains(j)) fail("J not contained in J^lim");
      if (e_param != e_hs) fail("multiplicity routes disagree: " + std::to_string(e_param) + " vs " + std::to_string(e_hs));
      if (l_lim > e_param) fail("colength(J^lim) = " + std::to_string(l_lim) + " > e = " + std::to_string(e_param));
      auto chain = check_chain(e.ring, seq, false, opts);
      if (chain.verdict == Verdict::fails) fail("J^lim not contained in closure(J)");
      if (chain.verdict == Verdict::holds) ++closure_checked;
      if (e.cohen_macaulay) {
        auto cm = check_cm_via_lim(e.ring, seq, false, opts);
        Verdict want = *e.cohen_macaulay ? Verdict::cohen_macaulay : Verdict::not_cohen_macaulay;
        ++cm_checked;
        if (cm.verdict != want) fail("verdict " + to_string(cm.verdict) + ", expected " + to_string(want));
      }
    }
  }
  rep.set("sequences", sequences).set("closure_checked", closure_checked).set("cm_checked", cm_checked);
  rep.set("failures", failures);
  rep.verdict = failures == 0 ? Verdict::holds : Verdict::fails;
  return rep;
}

/// check_regular on the maximal ideal says regular exactly for polynomial rings.
template <CoefficientField F>
Report property_regularity(const std::vector<CorpusEntry<F>>& entries, DetectorOptions opts = {}) {
  Report rep;
  rep.check = "property: check_regular(m) is regular exactly for polynomial rings";
  long long rings = 0, failures = 0;
  for (const auto& e : entries) {
    ++rings;
    // the flag is passed for R2 to exercise the override of a refuted assertion
    auto r = check_regular(Ideal<F>::maximal(e.ring), !e.equidimensional, opts);
    Verdict want = e.polynomial ? Verdict::regular : Verdict::not_regular;
    if (r.verdict != want) {
      ++failures;
      rep.witnesses.push_back(e.name + ": verdict " + to_string(r.verdict) + ", expected " + to_string(want));
    }
  }
  rep.set("rings", rings).set("failures", failures);
  rep.verdict = failures == 0 ? Verdict::holds : Verdict::fails;
  return rep;
}

}  // namespace closure_lab
