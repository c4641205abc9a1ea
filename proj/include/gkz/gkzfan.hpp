#pragma once

#include "gkz/config.hpp"

#include <cstdint>
#include <set>

namespace gkz {

/// Lexicographically smallest affinely independent n-subset of `marking`.
IndexSet affine_basis(const PointConfig& cfg, const IndexSet& marking);

/// u_{v,Delta} = e_v - sum_i a_i e_{w_i}, where (1, v) = sum_i a_i (1, w_i).
Vec condition_vector(const PointConfig& cfg, const IndexSet& basis, Index v);

struct ConditionGenerator {
  std::size_t cell;
  IndexSet basis;
  Index point;
  bool two_sided;  // point is marked in the cell, so both +u and -u generate
  Vec u;
};

struct ConditionCone {
  PolyCone cone;
  std::vector<ConditionGenerator> ledger;
  /// +u for every ledger entry, plus -u for two-sided entries.
  Matrix generators() const;
};

/// Reduced generator set: one affine basis per cell.
ConditionCone condition_cone(const PointConfig& cfg, const MarkedSubdivision& s);
/// Every affine basis of every cell; generates the same cone.
PolyCone condition_cone_full(const PointConfig& cfg, const MarkedSubdivision& s);

struct ClosedMembership {
  bool member = false;
  std::vector<int> signs;  // lex sign of Psi u per ledger entry
};

ClosedMembership closed_member(const ConditionCone& cc, const WeightMatrix& psi);
ClosedMembership closed_member(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s);

/// Open membership read off the ledger: closed, and strict on one-sided entries.
bool open_member_by_signs(const ConditionCone& cc, const WeightMatrix& psi);

/// The marked subdivision Q_Psi.
MarkedSubdivision subdivide(const PointConfig& cfg, const WeightMatrix& psi);

/// subdivide(cfg, psi) == s.
bool open_member(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s);

/// g_Psi as the lexicographic minimum of the affine maps psi_Q over the cells.
class PiecewiseLinearMap {
 public:
  PiecewiseLinearMap(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s);

  const MarkedSubdivision& subdivision() const { return sub_; }
  std::size_t n() const { return n_; }
  std::size_t rows() const { return rows_; }
  /// N x n matrix of the affine map on K(Q_j).
  const WeightMatrix& cell_map(std::size_t j) const { return maps_.at(j); }
  std::size_t cell_count() const { return maps_.size(); }

  /// Throws DomainError unless w lies in K(P).
  LexVec eval(const Vec& w) const;
  /// Cells j whose cone K(Q_j) contains w.
  std::vector<std::size_t> cells_containing(const Vec& w) const;
  bool in_support(const Vec& w) const { return support_.contains(w); }

 private:
  MarkedSubdivision sub_;
  std::size_t n_ = 0;
  std::size_t rows_ = 0;
  std::vector<WeightMatrix> maps_;
  std::vector<PolyCone> cones_;
  PolyCone support_;
};

/// g_Psi(w) through the cells of subdivide(cfg, psi).
LexVec g_eval(const PointConfig& cfg, const WeightMatrix& psi, const Vec& w);
/// g_Psi(w) as the lexicographic maximum of the fiber, by sequential exact LPs.
LexVec g_eval_fiber(const PointConfig& cfg, const WeightMatrix& psi, const Vec& w);

/// A rank-1 height function h with subdivide(h) == s, when one exists.
std::optional<Vec> regular_height(const PointConfig& cfg, const MarkedSubdivision& s);
bool is_regular(const PointConfig& cfg, const MarkedSubdivision& s);

/// All marked subdivisions of (conv A, A), canonical and sorted.
/// Throws BudgetExceeded after `budget` search nodes.
std::vector<MarkedSubdivision> enumerate_subdivisions(const PointConfig& cfg, std::size_t budget = 1000000);
std::vector<MarkedSubdivision> enumerate_regular_subdivisions(const PointConfig& cfg, std::size_t budget = 1000000);

/// Subdivisions induced by random integer heights drawn from [lo, hi].
std::set<MarkedSubdivision> sample_regular_subdivisions(const PointConfig& cfg, std::size_t samples,
                                                        std::uint64_t seed, long lo = -3, long hi = 3);

WeightMatrix scale_row(const WeightMatrix& psi, std::size_t row, const Rat& factor);
/// Adds factor * row `from` to the less significant row `to` (to > from).
WeightMatrix add_row_multiple(const WeightMatrix& psi, std::size_t from, std::size_t to, const Rat& factor);
WeightMatrix shift_row(const WeightMatrix& psi, std::size_t row, const Rat& constant);
/// A fixed family of elementary moves applied to psi.
std::vector<WeightMatrix> elementary_moves(const WeightMatrix& psi);

/// Dimension of C(s, N) = N * codim of the lineality space of the condition cone.
std::size_t cone_dim(const PointConfig& cfg, const MarkedSubdivision& s, std::size_t n_rows);

}  // namespace gkz
