#pragma once

/// Buchberger's algorithm with the normal selection strategy (sugar degree),
/// the product criterion and the chain criterion. Produces reduced bases.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "closure_lab/polynomial.hpp"

namespace closure_lab {

template <CoefficientField F>
class GroebnerBasis {
 public:
  using RingPtr = typename Polynomial<F>::RingPtr;

  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial<F>> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {
    leads_.reserve(elements_.size());
    for (const auto& g : elements_) leads_.push_back(g.leading_monomial());
  }

  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_monomial() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const auto& g) { return g.is_monomial(); });
  }

  /// First basis element whose leading monomial divides m.
  std::optional<std::size_t> divisor_of(const Monomial& m) const {
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      if (leads_[i].divides(m)) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements_ == b.elements_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial<F>> elements_;
  std::vector<Monomial> leads_;
};

namespace detail {

template <CoefficientField F>
std::optional<std::size_t> find_divisor(std::span<const Monomial> leads, const Monomial& m) {
  for (std::size_t i = 0; i < leads.size(); ++i) {
    if (leads[i].divides(m)) return i;
  }
  return std::nullopt;
}

/// Full reduction of f by polynomials with the given leaders.
template <CoefficientField F>
Polynomial<F> reduce_full(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors,
                          std::span<const Monomial> leads) {
  using Scalar = typename F::Scalar;
  if (f.is_zero() || divisors.empty()) return f;
  const auto& order = f.ring().order();
  std::vector<Term<F>> remainder;
  std::vector<Term<F>> cur = f.terms();
  std::vector<Term<F>> next;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto& lt = cur[pos];
    auto i = find_divisor<F>(leads, lt.monomial);
    if (!i) {
      remainder.push_back(lt);
      ++pos;
      continue;
    }
    // cur[pos..] - c * shift * g; the head cancels.
    const auto& g = divisors[*i];
    Monomial shift = lt.monomial / leads[*i];
    Scalar c = -(lt.coeff / g.leading_coefficient());
    const auto& gt = g.terms();
    next.clear();
    next.reserve(cur.size() - pos + gt.size());
    std::size_t a = pos + 1, b = 1;
    while (a < cur.size() || b < gt.size()) {
      if (b == gt.size()) {
        next.push_back(std::move(cur[a++]));
        continue;
      }
      Monomial mb = gt[b].monomial * shift;
      if (a == cur.size()) {
        next.push_back({mb, gt[b++].coeff * c});
        continue;
      }
      auto cmp = order.compare(cur[a].monomial, mb);
      if (cmp > 0) {
        next.push_back(std::move(cur[a++]));
      } else if (cmp < 0) {
        next.push_back({mb, gt[b++].coeff * c});
      } else {
        auto sum = cur[a++].coeff + gt[b++].coeff * c;
        if (!sum.is_zero()) next.push_back({mb, std::move(sum)});
      }
    }
    std::swap(cur, next);
    pos = 0;
  }
  return Polynomial<F>::from_sorted(f.ring_ptr(), std::move(remainder));
}

}  // namespace detail

/// Remainder of f modulo G: no term is divisible by a leading monomial of G.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  if (G.ring_ptr() && f.ring_ptr() && !f.ring().same_as(*G.ring_ptr())) {
    throw UsageError("normal form across different rings");
  }
  return detail::reduce_full<F>(f, G.elements(), G.leading_monomials());
}

/// Reduced Groebner basis of the ideal generated by gens.
template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const typename Polynomial<F>::RingPtr& ring, std::span<const Polynomial<F>> gens) {
  const auto& order = ring->order();
  for (const auto& g : gens) {
    if (g.ring_ptr() != ring && !g.ring().same_as(*ring)) throw UsageError("generator from a different ring");
  }

  // Inputs by increasing leading monomial so small elements reduce later ones.
  std::vector<Polynomial<F>> input;
  for (const auto& g : gens) {
    if (!g.is_zero()) input.push_back(g.monic());
  }
  std::stable_sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });

  std::vector<Polynomial<F>> basis;
  std::vector<Monomial> leads;
  std::vector<long long> sugar;
  std::vector<std::vector<char>> pending;  // pending[i][j], j < i

  // (sugar, lcm degree, j, i) with i > j; std::set keeps it deterministic.
  using Pair = std::tuple<long long, long long, std::size_t, std::size_t>;
  std::set<Pair> queue;

  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return pending[i][j] != 0;
  };

  auto add = [&](Polynomial<F> h, long long s) {
    std::size_t k = basis.size();
    leads.push_back(h.leading_monomial());
    basis.push_back(std::move(h));
    sugar.push_back(s);
    pending.emplace_back(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      Monomial l = lcm(leads[j], leads[k]);
      long long sj = sugar[j] + order.degree(l / leads[j]);
      long long sk = sugar[k] + order.degree(l / leads[k]);
      queue.emplace(std::max(sj, sk), order.degree(l), j, k);
      pending[k][j] = 1;
    }
  };

  for (auto& g : input) {
    auto h = detail::reduce_full<F>(g, basis, leads);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      return GroebnerBasis<F>(ring, {ring->one()});
    }
    add(h.monic(), g.degree());
  }

  while (!queue.empty()) {
    auto [s, deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending[i][j] = 0;
    const auto& li = leads[i];
    const auto& lj = leads[j];
    if (coprime(li, lj)) continue;                                   // product criterion
    if (basis[i].is_monomial() && basis[j].is_monomial()) continue;  // S-polynomial is zero
    Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (leads[k].divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    // basis elements are monic
    auto spoly = basis[i].shifted(l / li, ring->field().one()).minus_shifted(basis[j], l / lj, ring->field().one());
    auto h = detail::reduce_full<F>(spoly, basis, leads);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis<F>(ring, {ring->one()});
    add(h.monic(), s);
  }

  // Minimalize, then interreduce tails.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial<F>> minimal;
  std::vector<Monomial> minimal_leads;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    minimal_leads.push_back(leads[i]);
  }
  std::vector<Polynomial<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const auto& g = minimal[i];
    std::vector<Term<F>> tail(g.terms().begin() + 1, g.terms().end());
    auto t = detail::reduce_full<F>(Polynomial<F>::from_sorted(ring, std::move(tail)), minimal, minimal_leads);
    reduced.push_back(ring->monomial(g.leading_monomial()) + t);
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const auto& a, const auto& b) { return order.less(a.leading_monomial(), b.leading_monomial()); });
  return GroebnerBasis<F>(ring, std::move(reduced));
}

template <CoefficientField F>
GroebnerBasis<F> groebner_basis(const typename Polynomial<F>::RingPtr& ring,
                                 const std::vector<Polynomial<F>>& gens) {
  return groebner_basis<F>(ring, std::span<const Polynomial<F>>(gens));
}

/// Standard monomials (not divisible by any leading monomial) of weighted
/// degree at most bound. Without a bound the set must be finite.
template <CoefficientField F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& G, std::optional<long long> bound = std::nullopt) {
  const auto& ring = *G.ring_ptr();
  const std::size_t n = ring.nvars();
  const auto& leads = G.leading_monomials();
  if (!bound) {
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = std::any_of(leads.begin(), leads.end(),
                              [&](const Monomial& m) { return m.support() == (VariableMask{1} << v); });
      if (!pure && !G.is_unit()) {
        throw NotPrimaryError("infinitely many standard monomials: no power of " + ring.names()[v] +
                              " lies in the leading ideal (not primary to the maximal ideal)");
      }
    }
  }
  std::vector<Monomial> out;
  if (G.is_unit()) return out;
  // Depth-first over the order ideal: extend m only by variables at or after its last one.
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    if (G.divisor_of(m)) continue;
    if (bound && ring.order().degree(m) > *bound) continue;
    out.push_back(m);
    for (std::size_t v = n; v-- > first;) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      stack.emplace_back(next, v);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.order().less(a, b); });
  return out;
}

}  // namespace closure_lab
