#include "gkz/linalg.hpp"

#include "gkz/errors.hpp"

namespace gkz {

Echelon rref(Matrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("rref: row length mismatch");
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

Matrix canonical_basis(const Matrix& span, std::size_t cols) {
  Echelon e = rref(span, cols);
  for (auto& row : e.rows) row = primitive(row);
  return e.rows;
}

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis, cols);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b, std::size_t cols) {
  if (b.size() != m.size()) throw DimensionMismatch("solve: rhs length mismatch");
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw DimensionMismatch("solve: row length mismatch");
    aug[i].push_back(b[i]);
  }
  Echelon e = rref(aug, cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vec x = zeros(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][cols];
  return x;
}

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("determinant: matrix not square");
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("inverse: matrix not square");
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  Echelon e = rref(aug, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + static_cast<std::ptrdiff_t>(n), e.rows[i].end());
  return inv;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, zeros(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

bool in_span(const Matrix& m, const Vec& v, std::size_t cols) {
  Matrix ext = m;
  ext.push_back(v);
  return rank(ext, cols) == rank(m, cols);
}

std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols) {
  std::vector<std::size_t> chosen;
  Matrix acc;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc.push_back(m[i]);
    if (rank(acc, cols) == acc.size()) {
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
    if (acc.size() == cols) break;
  }
  return chosen;
}

}  // namespace gkz
