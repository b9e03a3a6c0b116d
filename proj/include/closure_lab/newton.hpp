#pragma once

/// Newton polyhedra of monomial ideals, decided exactly over the rationals.

#include <algorithm>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "closure_lab/monomial.hpp"

namespace closure_lab {

using ExponentVector = std::vector<int>;

namespace detail {

/// Phase-one simplex with Bland's rule on
///   sum_i lambda_i e_i + s = v,  sum_i lambda_i = 1,  lambda, s >= 0.
/// The slacks start basic in the coordinate rows, one artificial variable in
/// the convexity row. Feasible iff the artificial can be driven to zero.
inline bool newton_feasible(const ExponentVector& v, const std::vector<ExponentVector>& points) {
  const std::size_t n = v.size();
  const std::size_t m = points.size();
  const std::size_t cols = m + n + 1;  // lambda, slack, artificial
  const std::size_t rows = n + 1;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) t[j][i] = points[i][j];
    t[j][m + j] = 1;
    t[j][cols] = v[j];
  }
  for (std::size_t i = 0; i < m; ++i) t[n][i] = 1;
  t[n][m + n] = 1;
  t[n][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t j = 0; j < n; ++j) basis[j] = m + j;
  basis[n] = m + n;

  // objective: minimize the artificial; reduced costs = -(convexity row) off the basis
  std::vector<mpq_class> cost(cols + 1);
  for (std::size_t c = 0; c <= cols; ++c) cost[c] = -t[n][c];
  cost[m + n] = 0;

  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(cost[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    mpq_class best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][*enter]) <= 0) continue;
      mpq_class ratio = t[r][cols] / t[r][*enter];
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction; cannot happen for this bounded objective
    const std::size_t pr = *leave, pc = *enter;
    mpq_class pivot = t[pr][pc];
    for (auto& x : t[pr]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || sgn(t[r][pc]) == 0) continue;
      mpq_class factor = t[r][pc];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= factor * t[pr][c];
    }
    if (sgn(cost[pc]) != 0) {
      mpq_class factor = cost[pc];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= factor * t[pr][c];
    }
    basis[pr] = pc;
  }
  // the objective value is -cost[cols]
  return sgn(cost[cols]) == 0;
}

inline bool dominates(const ExponentVector& v, const ExponentVector& e) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < e[j]) return false;
  }
  return true;
}

}  // namespace detail

/// v lies in conv(points) + R^n_{>=0}.
inline bool in_newton_polyhedron(const ExponentVector& v, const std::vector<ExponentVector>& points) {
  if (points.empty()) return false;
  for (const auto& e : points) {
    if (detail::dominates(v, e)) return true;
  }
  return detail::newton_feasible(v, points);
}

/// Minimal exponent vectors of the integral closure of the monomial ideal
/// generated by x^e, e in points. Minimal generators lie in the box bounded
/// by the largest exponent of each variable among the points.
inline std::vector<ExponentVector> newton_closure(const std::vector<ExponentVector>& points, std::size_t nvars) {
  if (points.empty()) return {};
  ExponentVector box(nvars, 0);
  for (const auto& e : points) {
    for (std::size_t j = 0; j < nvars; ++j) box[j] = std::max(box[j], e[j]);
  }
  std::vector<ExponentVector> members;
  ExponentVector v(nvars, 0);
  while (true) {
    bool known = std::any_of(members.begin(), members.end(),
                             [&](const ExponentVector& e) { return detail::dominates(v, e); });
    if (known || in_newton_polyhedron(v, points)) members.push_back(v);
    std::size_t j = 0;
    while (j < nvars && v[j] == box[j]) v[j++] = 0;
    if (j == nvars) break;
    ++v[j];
  }
  std::vector<ExponentVector> minimal;
  for (const auto& a : members) {
    bool redundant = std::any_of(members.begin(), members.end(), [&](const ExponentVector& b) {
      return b != a && detail::dominates(a, b);
    });
    if (!redundant) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace closure_lab
