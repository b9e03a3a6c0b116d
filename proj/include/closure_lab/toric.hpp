#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "closure_lab/ideal.hpp"

namespace closure_lab {

/// Kernel of k[a_1..a_m] -> k[t_1..t_n], a_i -> t^{v_i}, computed by
/// eliminating the t variables from (a_i - t^{v_i}). The target ring must
/// have m variables; the result is its reduced basis, in that ring.
template <CoefficientField F>
std::vector<Polynomial<F>> toric_kernel(const typename Polynomial<F>::RingPtr& target,
                                        const std::vector<std::vector<int>>& vectors) {
  const std::size_t m = vectors.size();
  if (m != target->nvars()) throw UsageError("toric kernel needs one target variable per exponent vector");
  if (m == 0) return {};
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw UsageError("exponent vectors have different lengths");
    for (int e : v) {
      if (e < 0) throw UsageError("exponent vectors must be nonnegative");
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("@s" + std::to_string(i));
  names.insert(names.end(), target->names().begin(), target->names().end());
  VariableMask elim = (VariableMask{1} << n) - 1;
  auto ext = PolynomialRing<F>::make(target->field(), names, {}, elim);

  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < m; ++i) {
    Monomial param(n + m);
    for (std::size_t j = 0; j < n; ++j) param.set(j, vectors[i][j]);
    gens.push_back(ext->variable(n + i) - ext->monomial(param));
  }
  auto G = groebner_basis<F>(ext, gens);
  std::vector<int> down(n + m, -1);
  for (std::size_t i = 0; i < m; ++i) down[n + i] = static_cast<int>(i);
  std::vector<Polynomial<F>> out;
  for (const auto& g : G.elements()) {
    if ((g.support() & elim) == 0) out.push_back(g.transported(target, down));
  }
  return groebner_basis<F>(target, out).elements();
}

/// The semigroup ring k[t^{v_1}, ..., t^{v_m}] presented as k[a]/kernel.
/// Variable a_i gets weight |v_i| / g with g the gcd of all |v_i|, so the
/// kernel is homogeneous.
template <CoefficientField F>
RingPtr<F> toric_ring(F field, const std::vector<std::vector<int>>& vectors, std::vector<std::string> names) {
  if (names.size() != vectors.size()) throw UsageError("toric ring needs one name per exponent vector");
  std::vector<int> degrees;
  for (const auto& v : vectors) {
    int d = std::accumulate(v.begin(), v.end(), 0);
    if (d <= 0) throw UsageError("toric ring generators must have positive degree");
    degrees.push_back(d);
  }
  int g = 0;
  for (int d : degrees) g = std::gcd(g, d);
  for (int& d : degrees) d /= g;
  auto ambient = PolynomialRing<F>::make(std::move(field), std::move(names), degrees);
  return Ring<F>::make(ambient, toric_kernel<F>(ambient, vectors), true);
}

}  // namespace closure_lab
