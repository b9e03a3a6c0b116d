#pragma once

/// Independent oracles used by the tests. None of them calls the engine.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

inline bool divides(const Exps& g, const Exps& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (g[i] > v[i]) return false;
  }
  return true;
}

inline bool in_monomial_ideal(const std::vector<Exps>& gens, const Exps& v) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, v); });
}

inline std::vector<Exps> minimalize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens) {
      if (h != g && divides(h, g)) redundant = true;
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Generators of A^k for a monomial ideal A given by exponent vectors.
inline std::vector<Exps> power(const std::vector<Exps>& gens, int k) {
  std::vector<Exps> cur{Exps(gens.front().size(), 0)};
  for (int i = 0; i < k; ++i) {
    std::vector<Exps> next;
    for (const auto& c : cur) {
      for (const auto& g : gens) {
        Exps s = c;
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += g[j];
        next.push_back(std::move(s));
      }
    }
    cur = minimalize(std::move(next));
  }
  return cur;
}

/// x^v is integral over A if (x^v)^k lies in A^k for some k <= kmax.
inline bool power_test(const std::vector<Exps>& gens, const Exps& v, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    Exps kv = v;
    for (auto& e : kv) e *= k;
    if (in_monomial_ideal(power(gens, k), kv)) return true;
  }
  return false;
}

/// Elements of the affine semigroup generated by gens with total weight at most bound,
/// where weight is the sum of generator multiplicities (generators are assumed of equal
/// total degree, so this is the graded degree).
inline std::set<Exps> semigroup_up_to(const std::vector<Exps>& gens, int bound) {
  std::set<Exps> layer{Exps(gens.front().size(), 0)};
  std::set<Exps> all = layer;
  for (int d = 1; d <= bound; ++d) {
    std::set<Exps> next;
    for (const auto& s : layer) {
      for (const auto& g : gens) {
        Exps t = s;
        for (std::size_t j = 0; j < t.size(); ++j) t[j] += g[j];
        next.insert(t);
      }
    }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

/// Colength of the semigroup-ring ideal generated by the elements `ideal_gens`:
/// the number of semigroup elements s with s - g outside the semigroup for every g.
/// `bound` must exceed the degree of every standard element.
inline long long semigroup_colength(const std::vector<Exps>& gens, const std::vector<Exps>& ideal_gens, int bound) {
  auto s = semigroup_up_to(gens, bound);
  long long count = 0;
  for (const auto& e : s) {
    bool inside = false;
    for (const auto& g : ideal_gens) {
      Exps diff = e;
      bool ok = true;
      for (std::size_t j = 0; j < diff.size(); ++j) {
        diff[j] -= g[j];
        if (diff[j] < 0) ok = false;
      }
      if (ok && s.count(diff)) inside = true;
    }
    if (!inside) ++count;
  }
  return count;
}

/// Generators of the n-th power of a semigroup ideal, as semigroup elements.
inline std::vector<Exps> semigroup_power(const std::vector<Exps>& ideal_gens, int n) {
  std::set<Exps> cur{Exps(ideal_gens.front().size(), 0)};
  for (int i = 0; i < n; ++i) {
    std::set<Exps> next;
    for (const auto& c : cur) {
      for (const auto& g : ideal_gens) {
        Exps t = c;
        for (std::size_t j = 0; j < t.size(); ++j) t[j] += g[j];
        next.insert(t);
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

/// Multiplicity of an ideal of a d-dimensional semigroup ring from its Hilbert-Samuel
/// function: the d-th difference of n -> colength(I^n), read off at n = top.
inline long long semigroup_multiplicity(const std::vector<Exps>& gens, const std::vector<Exps>& ideal_gens, int dim,
                                        int top, int degree_bound_per_power) {
  std::vector<long long> len{0};
  for (int n = 1; n <= top; ++n) {
    len.push_back(semigroup_colength(gens, semigroup_power(ideal_gens, n), degree_bound_per_power * n + 1));
  }
  for (int d = 0; d < dim; ++d) {
    for (std::size_t i = len.size() - 1; i > 0; --i) len[i] -= len[i - 1];
  }
  return len.back();
}

}  // namespace oracle
