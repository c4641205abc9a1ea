#include "gkz/gkzfan.hpp"

#include "gkz/errors.hpp"
#include "gkz/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace gkz {

namespace {

bool contains_index(const IndexSet& s, Index i) { return std::binary_search(s.begin(), s.end(), i); }

void check_psi(const PointConfig& cfg, const WeightMatrix& psi) {
  if (psi.cols() != cfg.size())
    throw DimensionMismatch("weight matrix has " + std::to_string(psi.cols()) + " columns, configuration has " +
                            std::to_string(cfg.size()) + " points");
  if (psi.rows() == 0) throw DimensionMismatch("weight matrix has no rows");
}

MarkedCell make_cell(const PointConfig& cfg, const IndexSet& marked) {
  return MarkedCell{hull_faces(cfg, marked).vertices, marked};
}

// Rows level.. of psi applied inside the cell marked by `points`.
void refine(const PointConfig& cfg, const WeightMatrix& psi, std::size_t level, const IndexSet& points,
            std::vector<MarkedCell>& out) {
  if (level == psi.rows()) {
    out.push_back(make_cell(cfg, points));
    return;
  }
  const std::size_t n = cfg.n();
  Matrix lifted;
  for (auto i : points) {
    Vec h = cfg.homogenized(i);
    h.push_back(psi.at(level, i));
    lifted.push_back(std::move(h));
  }
  if (rank(lifted, n + 1) == n) {
    refine(cfg, psi, level + 1, points, out);
    return;
  }
  PolyCone cone = PolyCone::from_generators(n + 1, lifted);
  for (const auto& f : cone.facets()) {
    if (sgn(f[n]) <= 0) continue;
    IndexSet marked;
    for (std::size_t k = 0; k < points.size(); ++k)
      if (sgn(dot(f, lifted[k])) == 0) marked.push_back(points[k]);
    refine(cfg, psi, level + 1, marked, out);
  }
}

}  // namespace

IndexSet affine_basis(const PointConfig& cfg, const IndexSet& marking) {
  Matrix acc;
  IndexSet basis;
  for (auto i : marking) {
    acc.push_back(cfg.homogenized(i));
    if (rank(acc, cfg.n()) == acc.size()) {
      basis.push_back(i);
      if (basis.size() == cfg.n()) break;
    } else {
      acc.pop_back();
    }
  }
  if (basis.size() != cfg.n()) throw DomainError("affine_basis: marking is not full-dimensional");
  return basis;
}

Vec condition_vector(const PointConfig& cfg, const IndexSet& basis, Index v) {
  Matrix cols = transpose(cfg.homogenized(basis), cfg.n());
  auto a = solve(cols, cfg.homogenized(v), basis.size());
  if (!a) throw DomainError("condition_vector: basis does not span");
  Vec u = zeros(cfg.size());
  u[v] += 1;
  for (std::size_t i = 0; i < basis.size(); ++i) u[basis[i]] -= (*a)[i];
  return u;
}

Matrix ConditionCone::generators() const {
  Matrix g;
  for (const auto& e : ledger) {
    g.push_back(e.u);
    if (e.two_sided) g.push_back(negate(e.u));
  }
  return g;
}

ConditionCone condition_cone(const PointConfig& cfg, const MarkedSubdivision& s) {
  ConditionCone cc;
  for (std::size_t j = 0; j < s.cells().size(); ++j) {
    const auto& cell = s.cells()[j];
    IndexSet basis = affine_basis(cfg, cell.marking);
    for (Index v = 0; v < cfg.size(); ++v) {
      if (contains_index(basis, v)) continue;
      cc.ledger.push_back({j, basis, v, contains_index(cell.marking, v), condition_vector(cfg, basis, v)});
    }
  }
  cc.cone = PolyCone::from_generators(cfg.size(), cc.generators());
  return cc;
}

PolyCone condition_cone_full(const PointConfig& cfg, const MarkedSubdivision& s) {
  Matrix gens;
  const std::size_t n = cfg.n();
  for (const auto& cell : s.cells()) {
    const IndexSet& m = cell.marking;
    std::vector<bool> pick(m.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(n, m.size())), true);
    do {
      IndexSet basis;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (pick[k]) basis.push_back(m[k]);
      if (basis.size() != n || affine_rank(cfg, basis) != n) continue;
      for (Index v = 0; v < cfg.size(); ++v) {
        if (contains_index(basis, v)) continue;
        Vec u = condition_vector(cfg, basis, v);
        gens.push_back(u);
        if (contains_index(m, v)) gens.push_back(negate(u));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return PolyCone::from_generators(cfg.size(), gens);
}

ClosedMembership closed_member(const ConditionCone& cc, const WeightMatrix& psi) {
  ClosedMembership res;
  res.member = true;
  for (const auto& e : cc.ledger) {
    int s = mat_vec(psi, e.u).sign();
    res.signs.push_back(s);
    if (s > 0 || (e.two_sided && s != 0)) res.member = false;
  }
  return res;
}

ClosedMembership closed_member(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s) {
  check_psi(cfg, psi);
  return closed_member(condition_cone(cfg, s), psi);
}

bool open_member_by_signs(const ConditionCone& cc, const WeightMatrix& psi) {
  ClosedMembership m = closed_member(cc, psi);
  if (!m.member) return false;
  for (std::size_t i = 0; i < cc.ledger.size(); ++i)
    if (!cc.ledger[i].two_sided && m.signs[i] == 0) return false;
  return true;
}

MarkedSubdivision subdivide(const PointConfig& cfg, const WeightMatrix& psi) {
  check_psi(cfg, psi);
  IndexSet all(cfg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<MarkedCell> cells;
  refine(cfg, psi, 0, all, cells);
  return MarkedSubdivision(std::move(cells));
}

bool open_member(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s) {
  return subdivide(cfg, psi) == s;
}

PiecewiseLinearMap::PiecewiseLinearMap(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s)
    : sub_(s), n_(cfg.n()), rows_(psi.rows()) {
  check_psi(cfg, psi);
  IndexSet all(cfg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  support_ = PolyCone::from_generators(n_, cfg.homogenized(all));
  for (const auto& cell : sub_.cells()) {
    IndexSet basis = affine_basis(cfg, cell.marking);
    Matrix h = transpose(cfg.homogenized(basis), n_);  // columns (1, w_i)
    Matrix inv = *inverse(h);
    WeightMatrix m(rows_, n_);
    for (std::size_t k = 0; k < rows_; ++k)
      for (std::size_t c = 0; c < n_; ++c) {
        Rat x = 0;
        for (std::size_t i = 0; i < n_; ++i) x += psi.at(k, basis[i]) * inv[i][c];
        m.set(k, c, x);
      }
    maps_.push_back(std::move(m));
    cones_.push_back(PolyCone::from_generators(n_, cfg.homogenized(cell.marking)));
  }
}

LexVec PiecewiseLinearMap::eval(const Vec& w) const {
  if (w.size() != n_) throw DimensionMismatch("g_eval: point has " + std::to_string(w.size()) + " entries, expected " +
                                              std::to_string(n_));
  if (!support_.contains(w)) throw DomainError("g_eval: " + to_string(w) + " is outside K(P)");
  std::vector<LexVec> vals;
  for (const auto& m : maps_) vals.push_back(mat_vec(m, w));
  return lex_min_vertex(vals);
}

std::vector<std::size_t> PiecewiseLinearMap::cells_containing(const Vec& w) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cones_.size(); ++j)
    if (cones_[j].contains(w)) out.push_back(j);
  return out;
}

LexVec g_eval(const PointConfig& cfg, const WeightMatrix& psi, const Vec& w) {
  return PiecewiseLinearMap(cfg, psi, subdivide(cfg, psi)).eval(w);
}

LexVec g_eval_fiber(const PointConfig& cfg, const WeightMatrix& psi, const Vec& w) {
  check_psi(cfg, psi);
  const std::size_t r = cfg.size(), n = cfg.n();
  if (w.size() != n) throw DimensionMismatch("g_eval_fiber: point has wrong length");
  LinearProgram lp(r);
  for (std::size_t k = 0; k < n; ++k) {
    Vec row(r);
    for (std::size_t v = 0; v < r; ++v) row[v] = cfg.homogenized(v)[k];
    lp.add_constraint(row, Relation::Equal, w[k]);
  }
  Vec out;
  for (std::size_t k = 0; k < psi.rows(); ++k) {
    Vec obj = psi.row(k);
    lp.maximize(obj);
    LpResult res = lp.solve();
    if (res.status == LpStatus::Infeasible) throw DomainError("g_eval_fiber: " + to_string(w) + " is outside K(P)");
    if (res.status != LpStatus::Optimal) throw DomainError("g_eval_fiber: unbounded fiber");
    out.push_back(res.objective);
    lp.add_constraint(obj, Relation::Equal, res.objective);
  }
  return LexVec(std::move(out));
}

std::optional<Vec> regular_height(const PointConfig& cfg, const MarkedSubdivision& s) {
  ValidationReport rep = validate_subdivision(cfg, s);
  if (!rep.ok()) throw DomainError("regular_height: invalid subdivision: " + rep.violations.front().message);
  ConditionCone cc = condition_cone(cfg, s);
  const std::size_t r = cfg.size();
  LinearProgram lp(r + 1);
  lp.set_all_free();
  for (const auto& e : cc.ledger) {
    Vec row = e.u;
    if (e.two_sided) {
      row.push_back(0);
      lp.add_constraint(row, Relation::Equal, 0);
    } else {
      row.push_back(1);
      lp.add_constraint(row, Relation::LessEq, 0);
    }
  }
  lp.add_constraint(unit(r + 1, r), Relation::LessEq, 1);
  lp.maximize(unit(r + 1, r));
  LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal || sgn(res.objective) <= 0) return std::nullopt;
  res.x.pop_back();
  return res.x;
}

bool is_regular(const PointConfig& cfg, const MarkedSubdivision& s) { return regular_height(cfg, s).has_value(); }

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const PointConfig& cfg, std::size_t budget) : cfg_(cfg), budget_(budget) {}

  std::vector<MarkedSubdivision> run() {
    const std::size_t r = cfg_.size();
    if (r > 20) throw BudgetExceeded("enumerate_subdivisions: too many points for brute force");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) < cfg_.n()) continue;
      IndexSet ids;
      for (Index i = 0; i < r; ++i)
        if ((mask >> i) & 1U) ids.push_back(i);
      if (affine_rank(cfg_, ids) != cfg_.n()) continue;
      tick();
      MarkedCell cell = make_cell(cfg_, ids);
      cands_.push_back(cell_geometry(cfg_, cell));
    }
    for (std::size_t c = 0; c < cands_.size(); ++c)
      for (const auto& fv : cands_[c].facet_vertices) by_facet_[fv].push_back(c);
    outer_ = hull_faces(cfg_);
    Vec x0 = generic_point();
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (!cands_[c].hull.in_relative_interior(x0)) continue;
      chosen_.push_back(c);
      dfs();
      chosen_.pop_back();
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("enumerate_subdivisions: budget of " + std::to_string(budget_) +
                                                 " search nodes exhausted");
  }

  bool boundary(const IndexSet& fv) const {
    return std::any_of(outer_.facet_points.begin(), outer_.facet_points.end(), [&](const IndexSet& of) {
      return std::includes(of.begin(), of.end(), fv.begin(), fv.end());
    });
  }

  bool compatible(std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = !pair_violation(cfg_, cands_[key.first], cands_[key.second]).has_value();
    memo_.emplace(key, ok);
    return ok;
  }

  const IndexSet* open_facet() const {
    for (auto c : chosen_)
      for (const auto& fv : cands_[c].facet_vertices) {
        if (boundary(fv)) continue;
        bool matched = false;
        for (auto o : chosen_)
          if (o != c && std::find(cands_[o].facet_vertices.begin(), cands_[o].facet_vertices.end(), fv) !=
                            cands_[o].facet_vertices.end())
            matched = true;
        if (!matched) return &fv;
      }
    return nullptr;
  }

  void dfs() {
    tick();
    const IndexSet* fv = open_facet();
    if (!fv) {
      std::vector<MarkedCell> cells;
      for (auto c : chosen_) cells.push_back(cands_[c].cell);
      found_.emplace_back(std::move(cells));
      return;
    }
    IndexSet facet = *fv;
    for (auto c : by_facet_[facet]) {
      if (std::find(chosen_.begin(), chosen_.end(), c) != chosen_.end()) continue;
      bool ok = true;
      for (auto o : chosen_)
        if (!compatible(o, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen_.push_back(c);
      dfs();
      chosen_.pop_back();
    }
  }

  // interior point of conv A off every hyperplane spanned by points of A
  Vec generic_point() const {
    const std::size_t d = cfg_.dim(), n = cfg_.n(), r = cfg_.size();
    Matrix planes;
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(d, r)), true);
    do {
      IndexSet ids;
      for (Index i = 0; i < r; ++i)
        if (pick[i]) ids.push_back(i);
      Matrix ns = nullspace(cfg_.homogenized(ids), n);
      if (ns.size() == 1) planes.push_back(ns[0]);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    Vec centre = zeros(d);
    for (Index i = 0; i < r; ++i) centre = add(centre, cfg_.point(i));
    centre = scale(centre, frac(1, static_cast<long>(r)));
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long k = 1; k < 4000; ++k) {
      Vec x = centre;
      for (std::size_t j = 0; j < d; ++j) x[j] += frac(1, primes[j % 12] * (k + 3) + static_cast<long>(j));
      Vec h = x;
      h.insert(h.begin(), Rat(1));
      bool generic = outer_.in_relative_interior(x);
      for (const auto& p : planes)
        if (generic && sgn(dot(p, h)) == 0) generic = false;
      if (generic) return x;
    }
    throw DomainError("enumerate_subdivisions: no generic interior point found");
  }

  const PointConfig& cfg_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<CellGeometry> cands_;
  std::map<IndexSet, std::vector<std::size_t>> by_facet_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
  Hull outer_;
  std::vector<std::size_t> chosen_;
  std::vector<MarkedSubdivision> found_;
};

}  // namespace

std::vector<MarkedSubdivision> enumerate_subdivisions(const PointConfig& cfg, std::size_t budget) {
  return SubdivisionSearch(cfg, budget).run();
}

std::vector<MarkedSubdivision> enumerate_regular_subdivisions(const PointConfig& cfg, std::size_t budget) {
  std::vector<MarkedSubdivision> out;
  for (auto& s : enumerate_subdivisions(cfg, budget))
    if (is_regular(cfg, s)) out.push_back(std::move(s));
  return out;
}

std::set<MarkedSubdivision> sample_regular_subdivisions(const PointConfig& cfg, std::size_t samples,
                                                        std::uint64_t seed, long lo, long hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  std::set<MarkedSubdivision> out;
  for (std::size_t k = 0; k < samples; ++k) {
    Vec h(cfg.size());
    for (auto& x : h) x = dist(rng);
    out.insert(subdivide(cfg, WeightMatrix::embed_row(h, 1)));
  }
  return out;
}

WeightMatrix scale_row(const WeightMatrix& psi, std::size_t row, const Rat& factor) {
  if (sgn(factor) <= 0) throw DomainError("scale_row: factor must be positive");
  if (row >= psi.rows()) throw DimensionMismatch("scale_row: row out of range");
  WeightMatrix m = psi;
  for (std::size_t j = 0; j < m.cols(); ++j) m.set(row, j, psi.at(row, j) * factor);
  return m;
}

WeightMatrix add_row_multiple(const WeightMatrix& psi, std::size_t from, std::size_t to, const Rat& factor) {
  if (from >= psi.rows() || to >= psi.rows()) throw DimensionMismatch("add_row_multiple: row out of range");
  if (to <= from) throw DomainError("add_row_multiple: target row must be less significant than the source");
  WeightMatrix m = psi;
  for (std::size_t j = 0; j < m.cols(); ++j) m.set(to, j, psi.at(to, j) + factor * psi.at(from, j));
  return m;
}

WeightMatrix shift_row(const WeightMatrix& psi, std::size_t row, const Rat& constant) {
  if (row >= psi.rows()) throw DimensionMismatch("shift_row: row out of range");
  WeightMatrix m = psi;
  for (std::size_t j = 0; j < m.cols(); ++j) m.set(row, j, psi.at(row, j) + constant);
  return m;
}

std::vector<WeightMatrix> elementary_moves(const WeightMatrix& psi) {
  std::vector<WeightMatrix> out;
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    out.push_back(scale_row(psi, i, Rat(3)));
    out.push_back(scale_row(psi, i, Rat(1, 2)));
    out.push_back(shift_row(psi, i, Rat(5)));
    out.push_back(shift_row(psi, i, Rat(-7, 3)));
    for (std::size_t j = i + 1; j < psi.rows(); ++j) {
      out.push_back(add_row_multiple(psi, i, j, Rat(2)));
      out.push_back(add_row_multiple(psi, i, j, Rat(-3, 2)));
    }
  }
  return out;
}

std::size_t cone_dim(const PointConfig& cfg, const MarkedSubdivision& s, std::size_t n_rows) {
  ConditionCone cc = condition_cone(cfg, s);
  return n_rows * (cfg.size() - cc.cone.lineality().size());
}

}  // namespace gkz
