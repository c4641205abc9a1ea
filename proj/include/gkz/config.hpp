#pragma once

#include "gkz/cones.hpp"

#include <optional>
#include <string>

namespace gkz {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Finite set of distinct integer points whose affine span is all of Q^d.
class PointConfig {
 public:
  PointConfig(std::size_t dim, Matrix points);

  std::size_t dim() const { return dim_; }
  /// n = dim + 1, the length of homogenized points.
  std::size_t n() const { return dim_ + 1; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(Index i) const { return points_.at(i); }
  const Matrix& points() const { return points_; }
  /// (1, p_i).
  Vec homogenized(Index i) const;
  Matrix homogenized(const IndexSet& ids) const;

 private:
  std::size_t dim_;
  Matrix points_;
};

struct MarkedCell {
  IndexSet vertices;  // sorted
  IndexSet marking;   // sorted, contains vertices

  friend bool operator==(const MarkedCell&, const MarkedCell&) = default;
  friend auto operator<=>(const MarkedCell&, const MarkedCell&) = default;
};

/// Cells kept in canonical order (sorted by vertex set, then marking).
class MarkedSubdivision {
 public:
  MarkedSubdivision() = default;
  explicit MarkedSubdivision(std::vector<MarkedCell> cells);

  const std::vector<MarkedCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  /// Union of the markings.
  IndexSet marked_points() const;

  friend bool operator==(const MarkedSubdivision&, const MarkedSubdivision&) = default;
  friend auto operator<=>(const MarkedSubdivision&, const MarkedSubdivision&) = default;

 private:
  std::vector<MarkedCell> cells_;
};

std::string to_string(const MarkedSubdivision& s, const PointConfig& cfg);

/// Convex hull of a subset of the configuration, in homogenized form:
/// facet (c0, c) means c0 + c . x <= 0, equation means c0 + c . x = 0.
struct Hull {
  std::size_t affine_dim = 0;
  Matrix equations;
  Matrix facets;
  std::vector<IndexSet> facet_points;  // configuration indices on each facet
  IndexSet points;                     // the input subset
  IndexSet vertices;

  bool contains(const Vec& x) const;
  /// Interior relative to the affine hull.
  bool in_relative_interior(const Vec& x) const;
};

Hull hull_faces(const PointConfig& cfg, const IndexSet& subset);
Hull hull_faces(const PointConfig& cfg);

/// Indices of configuration points lying in conv(subset).
IndexSet points_in_hull(const PointConfig& cfg, const Hull& h);

std::size_t affine_rank(const PointConfig& cfg, const IndexSet& ids);

enum class ViolationCode {
  Empty,
  IndexOutOfRange,
  OutsideUniverse,
  MarkingMissesVertex,
  NotFullDimensional,
  NotAVertex,
  MarkingOutsideCell,
  DuplicateCell,
  NotFaceToFace,
  MarkingMismatch,
  NotCovering,
};

std::string to_string(ViolationCode c);

struct Violation {
  ViolationCode code;
  std::optional<std::size_t> cell_a;
  std::optional<std::size_t> cell_b;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationCode c) const;
};

/// Checks that s is a marked subdivision of (conv A, A).
ValidationReport validate_subdivision(const PointConfig& cfg, const MarkedSubdivision& s);
/// Same, for the sub-configuration given by `universe` (which must be full-dimensional).
ValidationReport validate_subdivision(const PointConfig& cfg, const MarkedSubdivision& s, const IndexSet& universe);

/// Precomputed geometry of a single cell.
struct CellGeometry {
  MarkedCell cell;
  Hull hull;
  std::vector<IndexSet> facet_vertices;
};

CellGeometry cell_geometry(const PointConfig& cfg, const MarkedCell& cell);

/// Pairwise face-to-face and marking compatibility of two valid cells.
std::optional<ViolationCode> pair_violation(const PointConfig& cfg, const CellGeometry& a, const CellGeometry& b);

/// s <= t in the refinement order: every cell of t is subdivided by cells of s.
bool refines(const PointConfig& cfg, const MarkedSubdivision& s, const MarkedSubdivision& t);

bool is_triangulation(const PointConfig& cfg, const MarkedSubdivision& s);

/// Pulling triangulation of conv(ids) using only its vertices.
std::vector<IndexSet> pulling_triangulation(const PointConfig& cfg, const IndexSet& ids);

/// |det| of the homogenized vertices of a full-dimensional simplex.
Rat simplex_volume(const PointConfig& cfg, const IndexSet& simplex);

/// Normalized volume (d! times euclidean volume) of conv(ids).
Rat normalized_volume(const PointConfig& cfg, const IndexSet& ids);

/// The subdivision with the single cell conv A marked by all of A.
MarkedSubdivision trivial_subdivision(const PointConfig& cfg);

}  // namespace gkz
