#pragma once

#include "gkz/degeneration.hpp"
#include "gkz/lp.hpp"

#include <random>

namespace gkz::testing {

/// A = {-2, -1, 0, 2, 4} with the two-row weight matrix inducing [-2,0], [0,4].
inline PointConfig running_config() { return PointConfig(1, {{-2}, {-1}, {0}, {2}, {4}}); }
inline WeightMatrix running_psi() { return WeightMatrix::from_rows({{1, 0, 2, 0, 1}, {0, 1, 1, 0, 1}}); }
inline MarkedSubdivision running_subdivision() {
  return MarkedSubdivision({{{0, 2}, {0, 2}}, {{2, 4}, {2, 4}}});
}

/// The triangle with vertices (0,0), (3,0), (0,3) and the interior point (1,1).
inline PointConfig simplex_config() { return PointConfig(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}}); }
inline MarkedSubdivision simplex_q0() { return MarkedSubdivision({{{0, 1, 2}, {0, 1, 2, 3}}}); }
inline MarkedSubdivision simplex_q1() { return MarkedSubdivision({{{0, 1, 2}, {0, 1, 2}}}); }
inline MarkedSubdivision simplex_q2() {
  return MarkedSubdivision({{{0, 1, 3}, {0, 1, 3}}, {{0, 2, 3}, {0, 2, 3}}, {{1, 2, 3}, {1, 2, 3}}});
}
/// 3 u with u = e4 - (e1 + e2 + e3) / 3.
inline Vec simplex_u() { return {-1, -1, -1, 3}; }

inline PointConfig square_center_config() { return PointConfig(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}); }

inline GradedPoint gp(long d, std::vector<long> eta) { return GradedPoint{d, std::move(eta)}; }

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat random_rat(Rng& rng, long bound = 4, long max_den = 3) {
  return frac(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
}

inline Vec random_vec(Rng& rng, std::size_t n, long bound = 3) {
  Vec v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

inline WeightMatrix random_psi(Rng& rng, std::size_t rows, std::size_t cols) {
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, frac(uniform(rng, -6, 6), uniform(rng, 1, 4)));
  return m;
}

/// Membership of x in cone(gens) by a feasibility LP in the multipliers.
inline bool lp_in_cone(const Matrix& gens, const Vec& x) {
  const std::size_t k = gens.size();
  if (k == 0) return is_zero(x);
  LinearProgram lp(k);
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][j];
    lp.add_constraint(row, Relation::Equal, x[j]);
  }
  lp.maximize(zeros(k));
  return lp.solve().status == LpStatus::Optimal;
}

/// Psi v <= 0 lexicographically for all v in cone(gens), by one LP per row over the box |lambda| <= 1.
inline bool lp_in_polar(const Matrix& gens, const WeightMatrix& psi) {
  const std::size_t k = gens.size();
  if (k == 0) return true;
  std::vector<Vec> tight;
  for (std::size_t row = 0; row < psi.rows(); ++row) {
    Vec obj(k);
    for (std::size_t i = 0; i < k; ++i) obj[i] = dot(psi.row(row), gens[i]);
    LinearProgram lp(k);
    for (std::size_t i = 0; i < k; ++i) lp.add_constraint(unit(k, i), Relation::LessEq, 1);
    for (const auto& t : tight) lp.add_constraint(t, Relation::Equal, 0);
    lp.maximize(obj);
    LpResult res = lp.solve();
    if (res.objective > 0) return false;
    tight.push_back(obj);
  }
  return true;
}

}  // namespace gkz::testing
