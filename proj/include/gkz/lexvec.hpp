#pragma once

#include "gkz/rational.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <variant>

namespace gkz {

/// Vector of rationals ordered lexicographically, index 0 most significant.
class LexVec {
 public:
  LexVec() = default;
  explicit LexVec(Vec coords) : coords_(std::move(coords)) {}
  LexVec(std::initializer_list<Rat> coords) : coords_(coords) {}

  static LexVec zero(std::size_t n) { return LexVec(zeros(n)); }

  std::size_t size() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const Vec& coords() const { return coords_; }

  bool is_zero() const { return gkz::is_zero(coords_); }
  /// -1, 0 or +1 according to the first nonzero entry.
  int sign() const;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading_index() const;

  LexVec operator+(const LexVec& o) const;
  LexVec operator-(const LexVec& o) const;
  LexVec operator-() const;
  LexVec operator*(const Rat& s) const;

  friend bool operator==(const LexVec& a, const LexVec& b);
  friend std::strong_ordering operator<=>(const LexVec& a, const LexVec& b);

 private:
  Vec coords_;
};

/// Throws DimensionMismatch on lengths that differ.
std::strong_ordering lex_cmp(const LexVec& a, const LexVec& b);

std::string to_string(const LexVec& v);

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// Element of Q^N with a top element adjoined.
class LexValue {
 public:
  LexValue(LexVec v) : value_(std::move(v)) {}
  LexValue(Infinity) : value_(Infinity{}) {}
  static LexValue infinity() { return LexValue(Infinity{}); }

  bool is_infinite() const { return std::holds_alternative<Infinity>(value_); }
  const LexVec& vec() const;

  LexValue operator+(const LexValue& o) const;
  friend bool operator==(const LexValue& a, const LexValue& b);
  friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b);

 private:
  std::variant<LexVec, Infinity> value_;
};

std::string to_string(const LexValue& v);

/// N x r rational matrix; row 0 is the most significant.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols);
  static WeightMatrix from_rows(const std::vector<Vec>& rows);
  /// The matrix with v as its top row and zeros below.
  static WeightMatrix embed_row(const Vec& v, std::size_t n_rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Rat v) { data_[i * cols_ + j] = std::move(v); }

  Vec row(std::size_t i) const;
  LexVec column(std::size_t j) const;
  std::vector<Vec> row_list() const;
  /// Row-major entries, the coordinates of the matrix in Q^{N r}.
  const Vec& flat() const { return data_; }
  bool is_zero() const { return gkz::is_zero(data_); }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// Psi * u, throws DimensionMismatch unless u has Psi.cols() entries.
LexVec mat_vec(const WeightMatrix& psi, std::span<const Rat> u);

/// Lexicographic maximum of a nonempty finite family.
LexVec lex_max_vertex(std::span<const LexVec> family);
LexVec lex_min_vertex(std::span<const LexVec> family);

}  // namespace gkz
