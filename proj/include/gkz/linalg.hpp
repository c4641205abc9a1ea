#pragma once

#include "gkz/rational.hpp"

#include <optional>

namespace gkz {

/// Dense rational matrix stored as a list of rows.
using Matrix = std::vector<Vec>;

struct Echelon {
  Matrix rows;                       // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form of a matrix with `cols` columns.
Echelon rref(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

/// Canonical basis of the row span: RREF rows scaled to primitive integers.
Matrix canonical_basis(const Matrix& span, std::size_t cols);

/// Canonical basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b, std::size_t cols);

Rat determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix transpose(const Matrix& m, std::size_t cols);

/// True when v lies in the row span of m.
bool in_span(const Matrix& m, const Vec& v, std::size_t cols);

/// Greedy choice of linearly independent rows; indices ascending.
std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols);

}  // namespace gkz
