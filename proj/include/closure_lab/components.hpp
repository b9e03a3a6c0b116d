#pragma once

/// Irreducible components of a Stanley-Reisner ring k[x]/J: for a minimal
/// prime P = (x_i : i in S) of J the component R/P is the polynomial ring on
/// the variables outside S.

#include <string>
#include <vector>

#include "closure_lab/ideal.hpp"

namespace closure_lab {

template <CoefficientField F>
struct Component {
  VariableMask prime = 0;
  RingPtr<F> ring;        // polynomial ring on the surviving variables
  std::vector<int> down;  // ambient index -> component index, -1 on P
  std::vector<int> up;    // component index -> ambient index

  /// Image of f in R/P: terms meeting P vanish.
  Polynomial<F> project(const Polynomial<F>& f) const {
    std::vector<Term<F>> kept;
    for (const auto& t : f.terms()) {
      if ((t.monomial.support() & prime) == 0) kept.push_back(t);
    }
    return Polynomial<F>(f.ring_ptr(), std::move(kept)).transported(ring->ambient_ptr(), down);
  }

  Ideal<F> project(const Ideal<F>& a) const {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : a.basis().elements()) gens.push_back(project(g));
    return Ideal<F>(ring, std::move(gens));
  }

  /// Preimage in the ambient polynomial ring of an ideal of R/P: lifted
  /// generators together with the variables of P.
  std::vector<Polynomial<F>> lift(const Ideal<F>& b, const typename Polynomial<F>::RingPtr& ambient) const {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : b.basis().elements()) gens.push_back(g.transported(ambient, up));
    for (std::size_t i = 0; i < ambient->nvars(); ++i) {
      if (prime & (VariableMask{1} << i)) gens.push_back(ambient->variable(i));
    }
    return gens;
  }

  std::string describe(const PolynomialRing<F>& ambient) const {
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < ambient.nvars(); ++i) {
      if (!(prime & (VariableMask{1} << i))) continue;
      if (!first) out += ", ";
      out += ambient.names()[i];
      first = false;
    }
    return out + ")";
  }
};

/// Components of a Stanley-Reisner ring, in the order of their prime masks.
template <CoefficientField F>
std::vector<Component<F>> stanley_reisner_components(const Ring<F>& ring) {
  if (!ring.is_squarefree_monomial()) {
    throw UnsupportedError("ring is not a Stanley-Reisner ring (presenting ideal is not squarefree monomial)");
  }
  const auto& ambient = ring.ambient();
  std::vector<Component<F>> out;
  for (VariableMask p : minimal_prime_supports(ring.basis().leading_monomials())) {
    Component<F> c;
    c.prime = p;
    std::vector<std::string> names;
    std::vector<int> weights;
    c.down.assign(ambient.nvars(), -1);
    for (std::size_t i = 0; i < ambient.nvars(); ++i) {
      if (p & (VariableMask{1} << i)) continue;
      c.down[i] = static_cast<int>(names.size());
      c.up.push_back(static_cast<int>(i));
      names.push_back(ambient.names()[i]);
      weights.push_back(ambient.weights()[i]);
    }
    c.ring = Ring<F>::polynomial(ambient.field(), std::move(names), std::move(weights));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace closure_lab
