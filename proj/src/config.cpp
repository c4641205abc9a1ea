#include "gkz/config.hpp"

#include "gkz/errors.hpp"
#include "gkz/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkz {

namespace {

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool contains_index(const IndexSet& s, Index i) { return std::binary_search(s.begin(), s.end(), i); }

IndexSet sorted_unique(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Vec homog(const Vec& x) {
  Vec h;
  h.reserve(x.size() + 1);
  h.push_back(1);
  h.insert(h.end(), x.begin(), x.end());
  return h;
}

std::string point_label(const PointConfig& cfg, Index i) {
  const Vec& p = cfg.point(i);
  if (p.size() == 1) return to_string(p[0]);
  return to_string(p);
}

}  // namespace

PointConfig::PointConfig(std::size_t dim, Matrix points) : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw SchemaError("PointConfig: dimension must be positive");
  if (points_.empty()) throw SchemaError("PointConfig: no points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_)
      throw DimensionMismatch("PointConfig: point " + std::to_string(i) + " has " +
                              std::to_string(points_[i].size()) + " coordinates, expected " + std::to_string(dim_));
    for (const auto& x : points_[i])
      if (x.get_den() != 1) throw SchemaError("PointConfig: point " + std::to_string(i) + " is not integral");
  }
  std::set<Vec, decltype(&vec_less)> seen(&vec_less);
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!seen.insert(points_[i]).second)
      throw SchemaError("PointConfig: duplicate point " + to_string(points_[i]));
  Matrix h;
  for (std::size_t i = 0; i < points_.size(); ++i) h.push_back(homogenized(i));
  if (rank(h, n()) != n()) throw SchemaError("PointConfig: affine span is not full-dimensional");
}

Vec PointConfig::homogenized(Index i) const { return homog(point(i)); }

Matrix PointConfig::homogenized(const IndexSet& ids) const {
  Matrix m;
  for (auto i : ids) m.push_back(homogenized(i));
  return m;
}

MarkedSubdivision::MarkedSubdivision(std::vector<MarkedCell> cells) : cells_(std::move(cells)) {
  for (auto& c : cells_) {
    c.vertices = sorted_unique(c.vertices);
    c.marking = sorted_unique(c.marking);
  }
  std::sort(cells_.begin(), cells_.end());
}

IndexSet MarkedSubdivision::marked_points() const {
  IndexSet all;
  for (const auto& c : cells_) all.insert(all.end(), c.marking.begin(), c.marking.end());
  return sorted_unique(all);
}

std::string to_string(const MarkedSubdivision& s, const PointConfig& cfg) {
  std::string out;
  for (const auto& c : s.cells()) {
    if (!out.empty()) out += " ";
    out += "[conv{";
    for (std::size_t k = 0; k < c.vertices.size(); ++k) out += (k ? "," : "") + point_label(cfg, c.vertices[k]);
    out += "} marked {";
    for (std::size_t k = 0; k < c.marking.size(); ++k) out += (k ? "," : "") + point_label(cfg, c.marking[k]);
    out += "}]";
  }
  return out;
}

bool Hull::contains(const Vec& x) const {
  Vec h = homog(x);
  for (const auto& e : equations)
    if (sgn(dot(e, h)) != 0) return false;
  for (const auto& f : facets)
    if (sgn(dot(f, h)) > 0) return false;
  return true;
}

bool Hull::in_relative_interior(const Vec& x) const {
  if (!contains(x)) return false;
  Vec h = homog(x);
  for (const auto& f : facets)
    if (sgn(dot(f, h)) == 0) return false;
  return true;
}

Hull hull_faces(const PointConfig& cfg, const IndexSet& subset_in) {
  IndexSet subset = sorted_unique(subset_in);
  if (subset.empty()) throw DomainError("hull_faces: empty point set");
  for (auto i : subset)
    if (i >= cfg.size()) throw DomainError("hull_faces: index " + std::to_string(i) + " out of range");
  const std::size_t n = cfg.n();
  PolyCone cone = PolyCone::from_generators(n, cfg.homogenized(subset));
  Hull h;
  h.points = subset;
  h.affine_dim = cone.dim() - 1;
  h.equations = cone.equations();
  h.facets = cone.facets();
  for (const auto& f : h.facets) {
    IndexSet on;
    for (auto i : subset)
      if (sgn(dot(f, cfg.homogenized(i))) == 0) on.push_back(i);
    h.facet_points.push_back(std::move(on));
  }
  for (auto i : subset) {
    Matrix tight = h.equations;
    for (std::size_t k = 0; k < h.facets.size(); ++k)
      if (contains_index(h.facet_points[k], i)) tight.push_back(h.facets[k]);
    if (rank(tight, n) == n - 1) h.vertices.push_back(i);
  }
  return h;
}

Hull hull_faces(const PointConfig& cfg) {
  IndexSet all(cfg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return hull_faces(cfg, all);
}

IndexSet points_in_hull(const PointConfig& cfg, const Hull& h) {
  IndexSet out;
  for (Index i = 0; i < cfg.size(); ++i)
    if (h.contains(cfg.point(i))) out.push_back(i);
  return out;
}

std::size_t affine_rank(const PointConfig& cfg, const IndexSet& ids) { return rank(cfg.homogenized(ids), cfg.n()); }

std::string to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::Empty: return "EMPTY";
    case ViolationCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ViolationCode::OutsideUniverse: return "OUTSIDE_UNIVERSE";
    case ViolationCode::MarkingMissesVertex: return "MARKING_MISSES_VERTEX";
    case ViolationCode::NotFullDimensional: return "NOT_FULL_DIMENSIONAL";
    case ViolationCode::NotAVertex: return "NOT_A_VERTEX";
    case ViolationCode::MarkingOutsideCell: return "MARKING_OUTSIDE_CELL";
    case ViolationCode::DuplicateCell: return "DUPLICATE_CELL";
    case ViolationCode::NotFaceToFace: return "NOT_FACE_TO_FACE";
    case ViolationCode::MarkingMismatch: return "MARKING_MISMATCH";
    case ViolationCode::NotCovering: return "NOT_COVERING";
  }
  return "UNKNOWN";
}

bool ValidationReport::has(ViolationCode c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const Violation& v) { return v.code == c; });
}

CellGeometry cell_geometry(const PointConfig& cfg, const MarkedCell& cell) {
  CellGeometry g{cell, hull_faces(cfg, cell.vertices), {}};
  for (const auto& fp : g.hull.facet_points) g.facet_vertices.push_back(fp);
  return g;
}

std::optional<ViolationCode> pair_violation(const PointConfig& cfg, const CellGeometry& a, const CellGeometry& b) {
  const IndexSet& va = a.cell.vertices;
  const IndexSet& vb = b.cell.vertices;
  if (va == vb) return ViolationCode::DuplicateCell;
  IndexSet common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));

  // hyperplane a.x = b0 weakly separating the cells, strict off the common vertices
  const std::size_t d = cfg.dim();
  LinearProgram lp(d + 2);
  lp.set_all_free();
  auto row = [&](Index p, const Rat& s, const Rat& t) {
    Vec c = zeros(d + 2);
    for (std::size_t k = 0; k < d; ++k) c[k] = s * cfg.point(p)[k];
    c[d] = -s;
    c[d + 1] = t;
    return c;
  };
  for (auto p : va) {
    if (contains_index(common, p))
      lp.add_constraint(row(p, 1, 0), Relation::Equal, 0);
    else
      lp.add_constraint(row(p, 1, 1), Relation::LessEq, 0);
  }
  for (auto p : vb)
    if (!contains_index(common, p)) lp.add_constraint(row(p, -1, 1), Relation::LessEq, 0);
  lp.add_constraint(unit(d + 2, d + 1), Relation::LessEq, 1);
  lp.maximize(unit(d + 2, d + 1));
  LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal || sgn(res.objective) <= 0) return ViolationCode::NotFaceToFace;

  IndexSet marked;
  std::set_union(a.cell.marking.begin(), a.cell.marking.end(), b.cell.marking.begin(), b.cell.marking.end(),
                 std::back_inserter(marked));
  for (auto p : marked) {
    if (a.hull.contains(cfg.point(p)) && b.hull.contains(cfg.point(p)) &&
        contains_index(a.cell.marking, p) != contains_index(b.cell.marking, p))
      return ViolationCode::MarkingMismatch;
  }
  return std::nullopt;
}

ValidationReport validate_subdivision(const PointConfig& cfg, const MarkedSubdivision& s) {
  IndexSet all(cfg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return validate_subdivision(cfg, s, all);
}

ValidationReport validate_subdivision(const PointConfig& cfg, const MarkedSubdivision& s, const IndexSet& universe_in) {
  ValidationReport rep;
  IndexSet universe = sorted_unique(universe_in);
  auto fail = [&](ViolationCode c, std::optional<std::size_t> i, std::optional<std::size_t> j, std::string msg) {
    rep.violations.push_back({c, i, j, std::move(msg)});
  };
  if (s.cells().empty()) {
    fail(ViolationCode::Empty, std::nullopt, std::nullopt, "subdivision has no cells");
    return rep;
  }
  const auto& cells = s.cells();
  std::vector<CellGeometry> geo;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    std::string tag = "cell " + std::to_string(i);
    bool in_range = true;
    for (auto p : c.marking) in_range = in_range && p < cfg.size();
    for (auto p : c.vertices) in_range = in_range && p < cfg.size();
    if (!in_range) {
      fail(ViolationCode::IndexOutOfRange, i, std::nullopt, tag + ": point index out of range");
      continue;
    }
    if (!is_subset(c.vertices, universe) || !is_subset(c.marking, universe)) {
      fail(ViolationCode::OutsideUniverse, i, std::nullopt, tag + ": uses points outside the configuration");
      continue;
    }
    if (!is_subset(c.vertices, c.marking)) {
      fail(ViolationCode::MarkingMissesVertex, i, std::nullopt, tag + ": marking does not contain every vertex");
      continue;
    }
    if (affine_rank(cfg, c.vertices) != cfg.n()) {
      fail(ViolationCode::NotFullDimensional, i, std::nullopt, tag + ": cell is not full-dimensional");
      continue;
    }
    CellGeometry g = cell_geometry(cfg, c);
    if (g.hull.vertices != c.vertices) {
      fail(ViolationCode::NotAVertex, i, std::nullopt, tag + ": listed vertex is not extreme");
      continue;
    }
    bool inside = true;
    for (auto p : c.marking) inside = inside && g.hull.contains(cfg.point(p));
    if (!inside) {
      fail(ViolationCode::MarkingOutsideCell, i, std::nullopt, tag + ": marked point outside the cell");
      continue;
    }
    geo.push_back(std::move(g));
  }
  if (!rep.ok()) return rep;

  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (auto v = pair_violation(cfg, geo[i], geo[j]))
        fail(*v, i, j, "cells " + std::to_string(i) + " and " + std::to_string(j) + ": " + to_string(*v));
  if (!rep.ok()) return rep;

  Hull outer = hull_faces(cfg, universe);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& fv : geo[i].facet_vertices) {
      bool boundary = std::any_of(outer.facet_points.begin(), outer.facet_points.end(),
                                  [&](const IndexSet& of) { return is_subset(fv, of); });
      if (boundary) continue;
      bool matched = false;
      for (std::size_t j = 0; j < cells.size() && !matched; ++j)
        if (j != i)
          matched = std::find(geo[j].facet_vertices.begin(), geo[j].facet_vertices.end(), fv) !=
                    geo[j].facet_vertices.end();
      if (!matched) {
        fail(ViolationCode::NotCovering, i, std::nullopt,
             "cell " + std::to_string(i) + ": interior facet has no neighbouring cell");
        return rep;
      }
    }
  }
  return rep;
}

bool refines(const PointConfig& cfg, const MarkedSubdivision& s, const MarkedSubdivision& t) {
  for (const auto& big : t.cells()) {
    Hull h = hull_faces(cfg, big.vertices);
    std::vector<MarkedCell> inside;
    for (const auto& c : s.cells()) {
      bool in = std::all_of(c.vertices.begin(), c.vertices.end(),
                            [&](Index p) { return h.contains(cfg.point(p)); });
      if (in) inside.push_back(c);
    }
    if (!validate_subdivision(cfg, MarkedSubdivision(inside), big.marking).ok()) return false;
  }
  return true;
}

bool is_triangulation(const PointConfig& cfg, const MarkedSubdivision& s) {
  for (const auto& c : s.cells())
    if (c.vertices.size() != cfg.n() || c.marking != c.vertices) return false;
  return !s.cells().empty();
}

std::vector<IndexSet> pulling_triangulation(const PointConfig& cfg, const IndexSet& ids) {
  Hull h = hull_faces(cfg, ids);
  if (h.vertices.size() == h.affine_dim + 1) return {h.vertices};
  Index v0 = h.vertices.front();
  std::vector<IndexSet> out;
  for (const auto& fp : h.facet_points) {
    if (contains_index(fp, v0)) continue;
    IndexSet fv;
    std::set_intersection(fp.begin(), fp.end(), h.vertices.begin(), h.vertices.end(), std::back_inserter(fv));
    for (auto simplex : pulling_triangulation(cfg, fv)) {
      simplex.push_back(v0);
      out.push_back(sorted_unique(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat simplex_volume(const PointConfig& cfg, const IndexSet& simplex) {
  if (simplex.size() != cfg.n()) throw DomainError("simplex_volume: not a full-dimensional simplex");
  return abs(determinant(cfg.homogenized(simplex)));
}

Rat normalized_volume(const PointConfig& cfg, const IndexSet& ids) {
  if (affine_rank(cfg, ids) != cfg.n()) return 0;
  Rat v = 0;
  for (const auto& s : pulling_triangulation(cfg, ids)) v += simplex_volume(cfg, s);
  return v;
}

MarkedSubdivision trivial_subdivision(const PointConfig& cfg) {
  Hull h = hull_faces(cfg);
  IndexSet all(cfg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return MarkedSubdivision({MarkedCell{h.vertices, all}});
}

}  // namespace gkz
