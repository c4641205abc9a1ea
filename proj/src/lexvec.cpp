#include "gkz/lexvec.hpp"

#include "gkz/errors.hpp"

namespace gkz {

int LexVec::sign() const {
  for (const auto& x : coords_)
    if (sgn(x) != 0) return sgn(x);
  return 0;
}

std::size_t LexVec::leading_index() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return i;
  return coords_.size();
}

LexVec LexVec::operator+(const LexVec& o) const { return LexVec(add(coords_, o.coords_)); }
LexVec LexVec::operator-(const LexVec& o) const { return LexVec(sub(coords_, o.coords_)); }
LexVec LexVec::operator-() const { return LexVec(negate(coords_)); }
LexVec LexVec::operator*(const Rat& s) const { return LexVec(scale(coords_, s)); }

bool operator==(const LexVec& a, const LexVec& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const LexVec& a, const LexVec& b) { return lex_cmp(a, b); }

std::strong_ordering lex_cmp(const LexVec& a, const LexVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("lex_cmp: lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const LexVec& v) { return to_string(v.coords()); }

const LexVec& LexValue::vec() const {
  if (is_infinite()) throw DomainError("LexValue: value is infinite");
  return std::get<LexVec>(value_);
}

LexValue LexValue::operator+(const LexValue& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return LexValue(vec() + o.vec());
}

bool operator==(const LexValue& a, const LexValue& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.vec() == b.vec();
}

std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return lex_cmp(a.vec(), b.vec());
}

std::string to_string(const LexValue& v) { return v.is_infinite() ? "inf" : to_string(v.vec()); }

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

WeightMatrix WeightMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) throw DimensionMismatch("WeightMatrix: at least one row required");
  WeightMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("WeightMatrix: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

WeightMatrix WeightMatrix::embed_row(const Vec& v, std::size_t n_rows) {
  if (n_rows == 0) throw DimensionMismatch("WeightMatrix: at least one row required");
  WeightMatrix m(n_rows, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
  return m;
}

Vec WeightMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

LexVec WeightMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return LexVec(std::move(c));
}

std::vector<Vec> WeightMatrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

LexVec mat_vec(const WeightMatrix& psi, std::span<const Rat> u) {
  if (u.size() != psi.cols())
    throw DimensionMismatch("mat_vec: matrix has " + std::to_string(psi.cols()) +
                            " columns, vector has " + std::to_string(u.size()) + " entries");
  Vec out(psi.rows(), Rat(0));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (sgn(u[j]) == 0) continue;
    for (std::size_t i = 0; i < psi.rows(); ++i) out[i] += psi.at(i, j) * u[j];
  }
  return LexVec(std::move(out));
}

LexVec lex_max_vertex(std::span<const LexVec> family) {
  if (family.empty()) throw DomainError("lex_max_vertex: empty family");
  const LexVec* best = &family[0];
  for (const auto& v : family)
    if (lex_cmp(v, *best) > 0) best = &v;
  return *best;
}

LexVec lex_min_vertex(std::span<const LexVec> family) {
  if (family.empty()) throw DomainError("lex_min_vertex: empty family");
  const LexVec* best = &family[0];
  for (const auto& v : family)
    if (lex_cmp(v, *best) < 0) best = &v;
  return *best;
}

}  // namespace gkz
