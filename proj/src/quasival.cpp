#include "gkz/quasival.hpp"

#include "gkz/errors.hpp"
#include "gkz/lp.hpp"

#include <algorithm>
#include <numeric>

namespace gkz {

namespace {

std::vector<long> as_longs(const Vec& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_num().get_si());
  return out;
}

// vertices of the convex hull of a finite point set, by LP exclusion
std::vector<std::size_t> hull_vertices(const Matrix& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i && pts[j] != pts[i]) others.push_back(j);
    if (others.empty()) {
      out.push_back(i);
      continue;
    }
    LinearProgram lp(others.size());
    for (std::size_t k = 0; k < pts[i].size(); ++k) {
      Vec row(others.size());
      for (std::size_t j = 0; j < others.size(); ++j) row[j] = pts[others[j]][k];
      lp.add_constraint(row, Relation::Equal, pts[i][k]);
    }
    lp.add_constraint(Vec(others.size(), Rat(1)), Relation::Equal, 1);
    if (lp.solve().status == LpStatus::Infeasible) out.push_back(i);
  }
  return out;
}

}  // namespace

Vec GradedPoint::as_vec() const {
  Vec v;
  v.push_back(Rat(d));
  for (auto e : eta) v.push_back(Rat(e));
  return v;
}

GradedPoint GradedPoint::operator+(const GradedPoint& o) const {
  if (eta.size() != o.eta.size()) throw DimensionMismatch("GradedPoint: dimension mismatch");
  GradedPoint r{d + o.d, eta};
  for (std::size_t k = 0; k < eta.size(); ++k) r.eta[k] += o.eta[k];
  return r;
}

GradedPoint GradedPoint::times(long k) const {
  GradedPoint r{d * k, eta};
  for (auto& e : r.eta) e *= k;
  return r;
}

std::string to_string(const GradedPoint& u) {
  std::string s = "(" + std::to_string(u.d);
  for (auto e : u.eta) s += "," + std::to_string(e);
  return s + ")";
}

GradedPoint generator(const PointConfig& cfg, Index i) { return GradedPoint{1, as_longs(cfg.point(i))}; }

Expr monomial(const GradedPoint& u, const Rat& coeff) {
  Expr e;
  if (sgn(coeff) != 0) e[u] = coeff;
  return e;
}

Expr expr_add(const Expr& a, const Expr& b) {
  Expr r = a;
  for (const auto& [u, c] : b) {
    Rat s = r[u] + c;
    if (sgn(s) == 0)
      r.erase(u);
    else
      r[u] = s;
  }
  return r;
}

Expr expr_mul(const Expr& a, const Expr& b) {
  Expr r;
  for (const auto& [u, c] : a)
    for (const auto& [w, e] : b) {
      GradedPoint s = u + w;
      Rat x = r[s] + c * e;
      if (sgn(x) == 0)
        r.erase(s);
      else
        r[s] = x;
    }
  return r;
}

long max_degree(const Expr& f) {
  long m = 0;
  for (const auto& [u, c] : f) m = std::max(m, u.d);
  return m;
}

std::vector<GradedPoint> semigroup_up_to(const PointConfig& cfg, long max_deg) {
  std::set<GradedPoint> all;
  std::set<GradedPoint> layer{GradedPoint{0, std::vector<long>(cfg.dim(), 0)}};
  all.insert(layer.begin(), layer.end());
  for (long d = 1; d <= max_deg; ++d) {
    std::set<GradedPoint> next;
    for (const auto& u : layer)
      for (Index i = 0; i < cfg.size(); ++i) next.insert(u + generator(cfg, i));
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<GradedPoint> semigroup_by_lattice_scan(const PointConfig& cfg, long max_deg) {
  const std::size_t dim = cfg.dim();
  std::vector<long> lo(dim), hi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    lo[k] = hi[k] = cfg.point(0)[k].get_num().get_si();
    for (Index i = 0; i < cfg.size(); ++i) {
      long x = cfg.point(i)[k].get_num().get_si();
      lo[k] = std::min(lo[k], x);
      hi[k] = std::max(hi[k], x);
    }
  }
  Hull h = hull_faces(cfg);
  std::vector<GradedPoint> out;
  for (long d = 0; d <= max_deg; ++d) {
    std::vector<long> eta(dim);
    for (std::size_t k = 0; k < dim; ++k) eta[k] = d * lo[k];
    for (;;) {
      GradedPoint u{d, eta};
      bool inside = d == 0 ? std::all_of(eta.begin(), eta.end(), [](long e) { return e == 0; }) : [&] {
        Vec x(dim);
        for (std::size_t k = 0; k < dim; ++k) x[k] = frac(eta[k], d);
        return h.contains(x);
      }();
      if (inside && !rep_set(cfg, u, {}, 1).empty()) out.push_back(u);
      bool carry = true;
      for (std::size_t k = dim; k-- > 0 && carry;) {
        if (eta[k] < d * hi[k]) {
          ++eta[k];
          for (std::size_t j = k + 1; j < dim; ++j) eta[j] = d * lo[j];
          carry = false;
        }
      }
      if (carry) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long>> rep_set(const PointConfig& cfg, const GradedPoint& u, const IndexSet& allowed_in,
                                       std::size_t limit) {
  const std::size_t dim = cfg.dim();
  if (u.eta.size() != dim) throw DimensionMismatch("rep_set: point has wrong dimension");
  IndexSet allowed = allowed_in;
  if (allowed.empty()) {
    allowed.resize(cfg.size());
    std::iota(allowed.begin(), allowed.end(), Index{0});
  }
  std::vector<std::vector<long>> chi;
  for (auto i : allowed) chi.push_back(as_longs(cfg.point(i)));
  const std::size_t m = allowed.size();
  // suffix bounds for pruning
  std::vector<std::vector<long>> smin(m + 1, std::vector<long>(dim, 0)), smax = smin;
  for (std::size_t j = m; j-- > 0;)
    for (std::size_t k = 0; k < dim; ++k) {
      smin[j][k] = j + 1 < m ? std::min(chi[j][k], smin[j + 1][k]) : chi[j][k];
      smax[j][k] = j + 1 < m ? std::max(chi[j][k], smax[j + 1][k]) : chi[j][k];
    }
  std::vector<std::vector<long>> out;
  if (u.d < 0) return out;
  std::vector<long> alpha(m, 0);
  std::vector<long> rem = u.eta;
  auto rec = [&](auto&& self, std::size_t j, long rd) -> void {
    if (limit && out.size() >= limit) return;
    if (j == m) {
      if (rd == 0 && std::all_of(rem.begin(), rem.end(), [](long e) { return e == 0; })) {
        std::vector<long> full(cfg.size(), 0);
        for (std::size_t t = 0; t < m; ++t) full[allowed[t]] = alpha[t];
        out.push_back(std::move(full));
      }
      return;
    }
    for (std::size_t k = 0; k < dim; ++k)
      if (rem[k] < rd * smin[j][k] || rem[k] > rd * smax[j][k]) return;
    if (j + 1 == m) {
      // forced
      for (std::size_t k = 0; k < dim; ++k)
        if (rem[k] != rd * chi[j][k]) return;
      alpha[j] = rd;
      for (std::size_t k = 0; k < dim; ++k) rem[k] -= rd * chi[j][k];
      self(self, j + 1, 0);
      for (std::size_t k = 0; k < dim; ++k) rem[k] += rd * chi[j][k];
      alpha[j] = 0;
      return;
    }
    for (long a = rd; a >= 0; --a) {
      alpha[j] = a;
      for (std::size_t k = 0; k < dim; ++k) rem[k] -= a * chi[j][k];
      self(self, j + 1, rd - a);
      for (std::size_t k = 0; k < dim; ++k) rem[k] += a * chi[j][k];
    }
    alpha[j] = 0;
  };
  if (m == 0) {
    if (u.d == 0 && std::all_of(u.eta.begin(), u.eta.end(), [](long e) { return e == 0; }))
      out.push_back(std::vector<long>(cfg.size(), 0));
    return out;
  }
  rec(rec, 0, u.d);
  return out;
}

QuasiValuation::QuasiValuation(const PointConfig& cfg, const WeightMatrix& psi, long degree_bound)
    : cfg_(cfg), psi_(psi), plm_(cfg, psi, subdivide(cfg, psi)), degree_bound_(degree_bound) {}

LexVec QuasiValuation::g(const GradedPoint& u) const { return plm_.eval(u.as_vec()); }

LexVec QuasiValuation::nu_basis(const GradedPoint& u, std::vector<long>* witness) const {
  if (u.d > degree_bound_)
    throw DegreeBoundExceeded("nu: degree " + std::to_string(u.d) + " of " + to_string(u) +
                              " exceeds the bound " + std::to_string(degree_bound_));
  auto reps = rep_set(cfg_, u);
  if (reps.empty()) throw DomainError("nu: " + to_string(u) + " is not in the semigroup");
  std::optional<LexVec> best;
  for (const auto& a : reps) {
    Vec x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = Rat(a[i]);
    LexVec val = mat_vec(psi_, x);
    if (!best || val > *best) {
      best = val;
      if (witness) *witness = a;
    }
  }
  return *best;
}

LexVec QuasiValuation::delta_basis(const GradedPoint& u) const { return nu_basis(u) - g(u); }

ValuationReport QuasiValuation::v_quasi(const Expr& f) const {
  ValuationReport rep;
  for (const auto& [u, c] : f) {
    LexVec val = g(u);
    if (rep.value.is_infinite() || val < rep.value.vec()) {
      rep.value = val;
      rep.witness = u;
    }
  }
  if (rep.witness) {
    for (std::size_t j = 0; j < plm_.cell_count(); ++j)
      if (mat_vec(plm_.cell_map(j), rep.witness->as_vec()) == rep.value.vec()) {
        rep.cell = j;
        break;
      }
  }
  return rep;
}

ValuationReport QuasiValuation::v_quasi_vertices(const Expr& f) const {
  Matrix pts;
  std::vector<GradedPoint> support;
  for (const auto& [u, c] : f) {
    support.push_back(u);
    pts.push_back(u.as_vec());
  }
  Expr restricted;
  for (auto i : hull_vertices(pts)) restricted[support[i]] = 1;
  return v_quasi(restricted);
}

ValuationReport QuasiValuation::nu_quasi(const Expr& f) const {
  ValuationReport rep;
  for (const auto& [u, c] : f) {
    std::vector<long> alpha;
    LexVec val = nu_basis(u, &alpha);
    if (rep.value.is_infinite() || val < rep.value.vec()) {
      rep.value = val;
      rep.witness = u;
      rep.alpha = alpha;
    }
  }
  return rep;
}

LexValue QuasiValuation::delta(const Expr& f) const {
  LexValue best = LexValue::infinity();
  for (const auto& [u, c] : f) {
    LexValue d = delta_basis(u);
    if (d < best) best = d;
  }
  return best;
}

bool QuasiValuation::in_SQ(const GradedPoint& u, std::size_t cell) const {
  auto cells = plm_.cells_containing(u.as_vec());
  return std::find(cells.begin(), cells.end(), cell) != cells.end() && !rep_set(cfg_, u, {}, 1).empty();
}

bool QuasiValuation::in_SQ1(const GradedPoint& u, std::size_t cell) const {
  return !rep_set(cfg_, u, subdivision().cells().at(cell).marking, 1).empty();
}

std::vector<std::size_t> QuasiValuation::SQ1_cells(const GradedPoint& u) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < subdivision().size(); ++j)
    if (in_SQ1(u, j)) out.push_back(j);
  return out;
}

DeltaImage delta_image(const QuasiValuation& qv, long max_deg, bool descending) {
  auto elems = descending ? semigroup_by_lattice_scan(qv.config(), max_deg) : semigroup_up_to(qv.config(), max_deg);
  if (descending) std::reverse(elems.begin(), elems.end());
  DeltaImage img;
  img.per_cell.resize(qv.subdivision().size());
  for (const auto& u : elems) {
    LexVec d = qv.delta_basis(u);
    img.values.insert(d);
    for (auto j : qv.plm().cells_containing(u.as_vec())) img.per_cell[j].insert(d);
    ++img.elements;
  }
  return img;
}

Int stretch_factor(const PointConfig& cfg, const MarkedSubdivision& s) {
  Int l = 1;
  for (const auto& cell : s.cells())
    for (const auto& simplex : pulling_triangulation(cfg, cell.vertices)) {
      Int v = simplex_volume(cfg, simplex).get_num();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
    }
  return l;
}

PowerSeq power_seq(const QuasiValuation& qv, const Expr& f, long max_power) {
  if (f.empty()) throw DomainError("power_seq: f is zero");
  PowerSeq seq;
  Expr p = f;
  for (long l = 1; l <= max_power; ++l) {
    if (l > 1) {
      if (max_degree(f) * l > qv.degree_bound())
        throw DegreeBoundExceeded("power_seq: f^" + std::to_string(l) + " has degree " +
                                  std::to_string(max_degree(f) * l) + " above the bound " +
                                  std::to_string(qv.degree_bound()));
      p = expr_mul(p, f);
    }
    if (p.empty()) throw DomainError("power_seq: f^" + std::to_string(l) + " vanished");
    LexVec v = qv.nu_quasi(p).value.vec();
    seq.normalized.push_back(v * frac(1, l));
    seq.nu.push_back(std::move(v));
  }
  return seq;
}

Accumulation windowed_accumulation(const std::vector<LexVec>& nu_values) {
  Accumulation acc;
  const std::size_t L = nu_values.size();
  if (L == 0) throw DomainError("windowed_accumulation: empty window");
  for (std::size_t p = 1; 3 * p <= L; ++p) {
    bool ok = true;
    std::set<LexVec> pts;
    for (std::size_t c = 0; c < p && ok; ++c) {
      std::vector<std::size_t> cls;
      for (std::size_t i = c; i < L; i += p) cls.push_back(i);
      // the earliest member of each class is allowed to deviate
      std::size_t use = std::max<std::size_t>(3, cls.size() - 1);
      if (cls.size() < use) {
        ok = false;
        break;
      }
      std::vector<std::size_t> tail(cls.end() - static_cast<std::ptrdiff_t>(use), cls.end());
      LexVec step = nu_values[tail[1]] - nu_values[tail[0]];
      for (std::size_t t = 2; t < tail.size() && ok; ++t)
        if (nu_values[tail[t]] - nu_values[tail[t - 1]] != step) ok = false;
      if (ok) pts.insert(step * frac(1, static_cast<long>(p)));
    }
    if (ok) {
      acc.resolved = true;
      acc.period = p;
      acc.points = std::move(pts);
      acc.liminf = *acc.points.begin();
      return acc;
    }
  }
  // fall back to the normalized values of the second half of the window
  for (std::size_t i = L / 2; i < L; ++i) acc.points.insert(nu_values[i] * frac(1, static_cast<long>(i + 1)));
  acc.liminf = *acc.points.begin();
  return acc;
}

bool is_elementary(const QuasiValuation& qv, const Expr& f) {
  if (qv.psi().is_zero()) throw DomainError("is_elementary: Psi is zero");
  if (f.empty()) throw DomainError("is_elementary: f is zero");
  std::size_t k = 0;
  while (gkz::is_zero(qv.psi().row(k))) ++k;
  std::optional<Rat> best;
  std::size_t count = 0;
  for (const auto& [u, c] : f) {
    Rat x = qv.g(u)[k];
    if (!best || x < *best) {
      best = x;
      count = 1;
    } else if (x == *best) {
      ++count;
    }
  }
  return count == 1;
}

FullRankReport is_full_rank(const QuasiValuation& qv, long max_deg) {
  FullRankReport rep;
  std::map<LexVec, GradedPoint> seen;
  for (const auto& u : semigroup_up_to(qv.config(), max_deg)) {
    auto [it, fresh] = seen.emplace(qv.g(u), u);
    if (!fresh) {
      rep.full_rank = false;
      rep.collision = std::make_pair(it->second, u);
      return rep;
    }
  }
  return rep;
}

bool geometric_full_rank(const PointConfig& cfg, const WeightMatrix& psi, const MarkedSubdivision& s) {
  if (!is_triangulation(cfg, s)) throw DomainError("geometric_full_rank: subdivision is not a triangulation");
  if (psi.cols() != cfg.size()) throw DimensionMismatch("geometric_full_rank: column count mismatch");
  const auto& cells = s.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i; j < cells.size(); ++j) {
      IndexSet u;
      std::set_union(cells[i].marking.begin(), cells[i].marking.end(), cells[j].marking.begin(),
                     cells[j].marking.end(), std::back_inserter(u));
      Matrix cols;
      for (auto v : u) cols.push_back(psi.column(v).coords());
      if (rank(cols, psi.rows()) != u.size()) return false;
    }
  return true;
}

WeightMatrix stack(const WeightMatrix& psi, const PointConfig& cfg) {
  if (psi.cols() != cfg.size()) throw DimensionMismatch("stack: column count mismatch");
  std::vector<Vec> rows = psi.row_list();
  for (std::size_t k = 0; k < cfg.n(); ++k) {
    Vec r(cfg.size());
    for (Index v = 0; v < cfg.size(); ++v) r[v] = cfg.homogenized(v)[k];
    rows.push_back(std::move(r));
  }
  return WeightMatrix::from_rows(rows);
}

}  // namespace gkz
