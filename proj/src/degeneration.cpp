#include "gkz/degeneration.hpp"

#include "gkz/errors.hpp"

#include <algorithm>
#include <set>

namespace gkz {

CellMembership::CellMembership(const PointConfig& cfg, const MarkedSubdivision& s) : cfg_(&cfg), sub_(s) {
  for (const auto& c : sub_.cells()) cones_.push_back(PolyCone::from_generators(cfg.n(), cfg.homogenized(c.vertices)));
}

bool CellMembership::in_SQ(const GradedPoint& u, std::size_t j) const { return cones_.at(j).contains(u.as_vec()); }

bool CellMembership::in_SQ1(const GradedPoint& u, std::size_t j) const {
  if (!in_SQ(u, j)) return false;
  return !rep_set(*cfg_, u, sub_.cells()[j].marking, 1).empty();
}

bool CellMembership::in_some_SQ1(const GradedPoint& u) const {
  for (std::size_t j = 0; j < cell_count(); ++j)
    if (in_SQ1(u, j)) return true;
  return false;
}

namespace {

template <class Rule>
ProductTable build_table(const std::vector<GradedPoint>& basis, long max_deg, Rule rule) {
  ProductTable t;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto& u = basis[i];
      const auto& w = basis[j];
      if (u.d + w.d > max_deg) continue;
      t[{u, w}] = rule(u, w) ? std::optional<GradedPoint>(u + w) : std::nullopt;
    }
  return t;
}

}  // namespace

GrVPresentation gr_v_present(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg) {
  CellMembership cm(cfg, s);
  const std::size_t k = cm.cell_count();
  auto common = [&](const GradedPoint& u, const GradedPoint& w) {
    for (std::size_t j = 0; j < k; ++j)
      if (cm.in_SQ(u, j) && cm.in_SQ(w, j)) return true;
    return false;
  };
  GrVPresentation p;
  p.basis = semigroup_up_to(cfg, max_deg);
  p.table = build_table(p.basis, max_deg, common);

  for (std::size_t j = 0; j < k; ++j) {
    Hull h = hull_faces(cfg, s.cells()[j].vertices);
    GradedPoint sigma{0, std::vector<long>(cfg.dim(), 0)};
    for (auto i : points_in_hull(cfg, h)) sigma = sigma + generator(cfg, i);
    p.prime_witnesses.push_back(sigma);
  }

  p.annihilators_verified = true;
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& w : p.basis)
      if (common(p.prime_witnesses[j], w) != cm.in_SQ(w, j)) p.annihilators_verified = false;

  p.irredundant = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      bool nonzero = common(p.prime_witnesses[a], p.prime_witnesses[b]);
      if ((a == b) != nonzero) p.irredundant = false;
    }

  p.intersection_zero = std::all_of(p.basis.begin(), p.basis.end(), [&](const GradedPoint& u) {
    for (std::size_t j = 0; j < k; ++j)
      if (cm.in_SQ(u, j)) return true;
    return false;
  });

  p.nilpotent_free = true;
  for (const auto& u : p.basis) {
    if (u.d == 0) continue;
    GradedPoint acc = u;
    for (long l = 2; l * u.d <= max_deg; ++l) {
      if (!common(acc, u)) p.nilpotent_free = false;
      acc = acc + u;
    }
  }

  p.equidimensional = std::all_of(s.cells().begin(), s.cells().end(),
                                  [&](const MarkedCell& c) { return affine_rank(cfg, c.vertices) == cfg.n(); });
  return p;
}

ProductTable gr_v_table_from_valuation(const QuasiValuation& qv, long max_deg) {
  auto basis = semigroup_up_to(qv.config(), max_deg);
  return build_table(basis, max_deg,
                     [&](const GradedPoint& u, const GradedPoint& w) { return qv.g(u + w) == qv.g(u) + qv.g(w); });
}

GrNuPresentation gr_nu_reduced(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg) {
  CellMembership cm(cfg, s);
  const std::size_t k = cm.cell_count();
  const long stretch = stretch_factor(cfg, s).get_si();
  GrNuPresentation p;
  for (const auto& u : semigroup_up_to(cfg, max_deg)) {
    if (cm.in_some_SQ1(u)) {
      p.basis.push_back(u);
      continue;
    }
    bool found = false;
    for (long l = 2; l <= stretch && !found; ++l)
      for (std::size_t j = 0; j < k && !found; ++j)
        if (cm.in_SQ1(u.times(l), j)) {
          p.nilpotents.push_back({u, l, j});
          found = true;
        }
    if (!found) throw DomainError("gr_nu_reduced: no nilpotency exponent up to the stretch factor for " + to_string(u));
  }
  p.table = build_table(p.basis, max_deg, [&](const GradedPoint& u, const GradedPoint& w) {
    for (std::size_t j = 0; j < k; ++j)
      if (cm.in_SQ1(u, j) && cm.in_SQ1(w, j)) return true;
    return false;
  });
  return p;
}

ProductTable gr_nu_table_from_valuation(const QuasiValuation& qv, long max_deg) {
  std::vector<GradedPoint> basis;
  for (const auto& u : semigroup_up_to(qv.config(), max_deg))
    if (qv.delta_basis(u).is_zero()) basis.push_back(u);
  return build_table(basis, max_deg, [&](const GradedPoint& u, const GradedPoint& w) {
    GradedPoint s = u + w;
    return qv.nu_basis(s) == qv.nu_basis(u) + qv.nu_basis(w) && qv.delta_basis(s).is_zero();
  });
}

bool verify_nilpotent(const QuasiValuation& qv, const NilpotentWitness& w) {
  GradedPoint lu = w.u.times(w.exponent);
  Rat l(w.exponent);
  LexVec nu_lu = qv.nu_basis(lu);
  return nu_lu == qv.g(w.u) * l && nu_lu > qv.nu_basis(w.u) * l;
}

StanleyReisner stanley_reisner(const PointConfig& cfg, const MarkedSubdivision& t) {
  if (!is_triangulation(cfg, t)) throw DomainError("stanley_reisner: subdivision is not a triangulation");
  StanleyReisner sr;
  sr.variables = t.marked_points();
  for (Index i = 0; i < cfg.size(); ++i)
    if (!std::binary_search(sr.variables.begin(), sr.variables.end(), i)) sr.nilpotent.push_back(i);
  const std::size_t m = sr.variables.size();
  if (m > 24) throw BudgetExceeded("stanley_reisner: too many variables");
  auto is_face = [&](const IndexSet& f) {
    return std::any_of(t.cells().begin(), t.cells().end(), [&](const MarkedCell& c) {
      return std::includes(c.vertices.begin(), c.vertices.end(), f.begin(), f.end());
    });
  };
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  auto subset_of = [&](std::uint64_t mask) {
    IndexSet f;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) f.push_back(sr.variables[i]);
    return f;
  };
  for (auto mask : masks) {
    IndexSet f = subset_of(mask);
    if (is_face(f)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < m && minimal; ++i)
      if ((mask >> i) & 1U) minimal = is_face(subset_of(mask & ~(std::uint64_t{1} << i)));
    if (minimal) sr.nonfaces.push_back(f);
  }
  return sr;
}

bool sr_product_nonzero(const PointConfig& cfg, const MarkedSubdivision& t, const StanleyReisner& sr,
                        const GradedPoint& u, const GradedPoint& w) {
  auto support = [&](const GradedPoint& x) -> IndexSet {
    for (const auto& c : t.cells()) {
      auto reps = rep_set(cfg, x, c.marking, 1);
      if (reps.empty()) continue;
      IndexSet s;
      for (Index i = 0; i < reps[0].size(); ++i)
        if (reps[0][i] > 0) s.push_back(i);
      return s;
    }
    throw DomainError("sr_product_nonzero: " + to_string(x) + " lies in no S^1_Q");
  };
  IndexSet a = support(u), b = support(w), both;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  for (const auto& nf : sr.nonfaces)
    if (std::includes(both.begin(), both.end(), nf.begin(), nf.end())) return false;
  return true;
}

KhovanskiiReport khovanskii_report(const PointConfig& cfg, const MarkedSubdivision& s, long max_deg) {
  CellMembership cm(cfg, s);
  auto elems = semigroup_up_to(cfg, max_deg);
  KhovanskiiReport rep;
  rep.max_degree = max_deg;
  for (std::size_t j = 0; j < cm.cell_count(); ++j) {
    std::set<GradedPoint> sq;
    for (const auto& u : elems)
      if (cm.in_SQ(u, j)) sq.insert(u);
    std::vector<GradedPoint> extra;
    for (const auto& u : sq) {
      if (u.d < 2) continue;
      bool decomposable = false;
      for (const auto& a : sq) {
        if (a.d == 0 || a.d >= u.d) continue;
        GradedPoint rest{u.d - a.d, u.eta};
        for (std::size_t k = 0; k < rest.eta.size(); ++k) rest.eta[k] -= a.eta[k];
        if (sq.count(rest)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) extra.push_back(u);
    }
    if (!extra.empty()) rep.degree_one_suffices = false;
    rep.extra_generators.push_back(std::move(extra));
  }
  return rep;
}

}  // namespace gkz
