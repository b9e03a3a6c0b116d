#pragma once

/// Closures built from colon ideals: the iterated-saturation ideal
/// (x_1, ..., x_t)^inf and the limit closure of a system of parameters.

#include <optional>
#include <string>
#include <vector>

#include "closure_lab/ideal.hpp"

namespace closure_lab {

enum class ClosureMethod { infty, lim, newton, stanley_reisner, truncation, rees };

inline std::string to_string(ClosureMethod m) {
  switch (m) {
    case ClosureMethod::infty: return "infty";
    case ClosureMethod::lim: return "lim";
    case ClosureMethod::newton: return "newton";
    case ClosureMethod::stanley_reisner: return "stanley-reisner";
    case ClosureMethod::truncation: return "truncation";
    case ClosureMethod::rees: return "rees";
  }
  return "?";
}

struct ClosureDiagnostics {
  // infty: one exponent per saturation step
  std::vector<int> saturation_exponents;
  // infty with a full-length sequence: result is primary to the maximal ideal or the unit ideal
  std::optional<bool> primary_or_unit;
  // lim
  int window = 0;
  std::optional<int> stabilized_at;
  std::vector<long long> chain_colengths;
  // stanley-reisner: one line per minimal prime
  std::vector<std::string> components;
};

template <CoefficientField F>
struct ClosureResult {
  Ideal<F> closure;
  ClosureMethod method;
  ClosureDiagnostics diagnostics;
};

namespace detail {

template <CoefficientField F>
void check_sequence(const Ring<F>& ring, const std::vector<Polynomial<F>>& seq) {
  for (const auto& x : seq) {
    if (!x.ring().same_as(ring.ambient())) throw UsageError("sequence element " + x.to_string() + " is from another ring");
    if (x.is_zero()) throw UsageError("sequence contains the zero element");
    if (!x.is_homogeneous()) throw UsageError("sequence element is not weighted-homogeneous: " + x.to_string());
  }
}

template <CoefficientField F>
std::string describe_sequence(const std::vector<Polynomial<F>>& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += seq[i].to_string();
  }
  return out + "]";
}

}  // namespace detail

/// True iff seq has length dim R and generates an ideal primary to the maximal ideal.
template <CoefficientField F>
bool is_system_of_parameters(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq) {
  detail::check_sequence(*ring, seq);
  if (static_cast<int>(seq.size()) != ring->dimension()) return false;
  return is_primary_to_maximal(Ideal<F>(ring, seq));
}

template <CoefficientField F>
void require_system_of_parameters(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq) {
  if (!is_system_of_parameters(ring, seq)) {
    throw UsageError("not a system of parameters: " + detail::describe_sequence(seq) + " in a ring of dimension " +
                     std::to_string(ring->dimension()));
  }
}

/// (x_1)^inf = (x_1) + 0 : x_1^inf and
/// (x_1, ..., x_t)^inf = (x_t) + (x_1, ..., x_{t-1})^inf : x_t^inf.
/// The order of the sequence matters.
template <CoefficientField F>
ClosureResult<F> infty_ideal(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq) {
  if (seq.empty()) throw UsageError("infty ideal of an empty sequence");
  detail::check_sequence(*ring, seq);
  ClosureDiagnostics diag;
  Ideal<F> current = Ideal<F>::zero(ring);
  for (const auto& x : seq) {
    auto sat = saturation(current, x);
    diag.saturation_exponents.push_back(sat.exponent);
    current = ideal_sum(Ideal<F>(ring, {x}), sat.ideal);
  }
  if (static_cast<int>(seq.size()) == ring->dimension()) {
    diag.primary_or_unit = current.is_unit() || dimension(current) == 0;
  }
  return {std::move(current), ClosureMethod::infty, std::move(diag)};
}

struct LimitOptions {
  int window = 3;
  int max_n = 20;
};

/// Union of (x_1^{n+1}, ..., x_d^{n+1}) : (x_1 ... x_d)^n over n, detected by
/// `window` consecutive equal terms of the ascending chain.
template <CoefficientField F>
ClosureResult<F> limit_closure(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& seq,
                               LimitOptions opts = {}) {
  if (opts.window < 2) throw UsageError("limit closure window must be at least 2");
  require_system_of_parameters(ring, seq);
  ClosureDiagnostics diag;
  diag.window = opts.window;

  auto product = ring->ambient().one();
  for (const auto& x : seq) product *= x;

  std::optional<Ideal<F>> previous;
  int agreeing = 1;
  for (int n = 0; n <= opts.max_n; ++n) {
    std::vector<Polynomial<F>> powers;
    for (const auto& x : seq) powers.push_back(x.pow(n + 1));
    Ideal<F> term = ideal_quotient(Ideal<F>(ring, std::move(powers)), product.pow(n));
    diag.chain_colengths.push_back(colength(term));
    if (previous) {
      if (!term.contains(*previous)) {
        throw Error("internal invariant violated: limit closure chain is not ascending at n = " + std::to_string(n));
      }
      agreeing = (term == *previous) ? agreeing + 1 : 1;
    }
    previous = std::move(term);
    if (agreeing >= opts.window) {
      diag.stabilized_at = n;
      return {std::move(*previous), ClosureMethod::lim, std::move(diag)};
    }
  }
  throw UnstabilizedError("limit closure unstabilized: no " + std::to_string(opts.window) +
                              " consecutive equal terms for n <= " + std::to_string(opts.max_n),
                          diag.chain_colengths);
}

}  // namespace closure_lab
