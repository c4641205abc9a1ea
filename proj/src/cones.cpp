#include "gkz/cones.hpp"

#include "gkz/errors.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

Matrix with_negatives(Matrix list, const Matrix& basis) {
  for (const auto& v : basis) {
    list.push_back(v);
    list.push_back(negate(v));
  }
  return list;
}

void check_dim(std::size_t dim, const Vec& v, const char* what) {
  if (v.size() != dim)
    throw DimensionMismatch(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                            " in ambient dimension " + std::to_string(dim));
}

}  // namespace

PolyCone PolyCone::from_generators(std::size_t dim, const Matrix& gens) {
  for (const auto& g : gens) check_dim(dim, g, "from_generators");
  PolyCone c;
  c.dim_ = dim;
  c.dual_ = cone_from_inequalities(dim, gens);
  c.primal_ = cone_from_inequalities(dim, c.normals());
  return c;
}

PolyCone PolyCone::from_normals(std::size_t dim, const Matrix& normals) {
  for (const auto& n : normals) check_dim(dim, n, "from_normals");
  PolyCone c;
  c.dim_ = dim;
  c.primal_ = cone_from_inequalities(dim, normals);
  c.dual_ = cone_from_inequalities(dim, c.generators());
  return c;
}

Matrix PolyCone::generators() const { return with_negatives(primal_.rays, primal_.lineality); }

Matrix PolyCone::normals() const { return with_negatives(dual_.rays, dual_.lineality); }

Matrix PolyCone::normal_space() const { return nullspace(lineality(), dim_); }

bool PolyCone::contains(const Vec& x) const {
  check_dim(dim_, x, "contains");
  for (const auto& e : equations())
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& f : facets())
    if (sgn(dot(f, x)) > 0) return false;
  return true;
}

bool PolyCone::in_relative_interior(const Vec& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets())
    if (sgn(dot(f, x)) == 0) return false;
  return true;
}

bool PolyCone::is_subset_of(const PolyCone& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("is_subset_of: ambient dimensions differ");
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool operator==(const PolyCone& a, const PolyCone& b) {
  return a.dim_ == b.dim_ && a.primal_.lineality == b.primal_.lineality && a.primal_.rays == b.primal_.rays;
}

Matrix dd_convert(std::size_t dim, const Matrix& gens) { return PolyCone::from_generators(dim, gens).normals(); }

PolyCone cone_sum(const PolyCone& a, const PolyCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("cone_sum: ambient dimensions differ");
  Matrix g = a.generators();
  for (auto& v : b.generators()) g.push_back(v);
  return PolyCone::from_generators(a.ambient_dim(), g);
}

PolyCone cone_intersection(const PolyCone& a, const PolyCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("cone_intersection: ambient dimensions differ");
  Matrix n = a.normals();
  for (auto& v : b.normals()) n.push_back(v);
  return PolyCone::from_normals(a.ambient_dim(), n);
}

PolyCone coface(const PolyCone& c, const Vec& u) {
  if (!c.contains(u)) throw DomainError("coface: u = " + to_string(u) + " is not in the cone");
  Matrix tight;
  for (const auto& n : c.normals())
    if (sgn(dot(n, u)) == 0) tight.push_back(n);
  return PolyCone::from_normals(c.ambient_dim(), tight);
}

PolyCone coface_by_sum(const PolyCone& c, const Vec& u) {
  if (!c.contains(u)) throw DomainError("coface: u = " + to_string(u) + " is not in the cone");
  Matrix g = c.generators();
  g.push_back(u);
  g.push_back(negate(u));
  return PolyCone::from_generators(c.ambient_dim(), g);
}

std::vector<Face> cofaces(const PolyCone& c) {
  const Matrix& rays = c.rays();
  const Matrix& facets = c.facets();
  auto tight_rays = [&](const std::vector<std::size_t>& facet_ids) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool ok = true;
      for (auto f : facet_ids)
        if (sgn(dot(facets[f], rays[r])) != 0) ok = false;
      if (ok) out.push_back(r);
    }
    return out;
  };
  auto tight_facets = [&](const std::vector<std::size_t>& ray_ids) {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      bool ok = true;
      for (auto r : ray_ids)
        if (sgn(dot(facets[f], rays[r])) != 0) ok = false;
      if (ok) out.push_back(f);
    }
    return out;
  };

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  queue.push_back(all);
  seen.insert(all);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto face = queue[q];
    auto z = tight_facets(face);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (std::find(z.begin(), z.end(), f) != z.end()) continue;
      auto ids = z;
      ids.push_back(f);
      auto sub = tight_rays(ids);
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  std::vector<std::vector<std::size_t>> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Face> out;
  for (auto& f : faces) {
    Vec p = zeros(c.ambient_dim());
    for (auto r : f) p = add(p, rays[r]);
    PolyCone co = coface(c, p);
    out.push_back(Face{f, std::move(p), std::move(co)});
  }
  return out;
}

MuCone polar_N(const PolyCone& c, std::size_t n_rows) {
  if (n_rows == 0) throw DimensionMismatch("polar_N: N must be positive");
  return MuCone{n_rows, c};
}

PolyCone copolar(const MuCone& m) { return m.copolar; }

MuMembership mu_member(const MuCone& m, const WeightMatrix& psi) {
  if (psi.rows() != m.N || psi.cols() != m.cols())
    throw DimensionMismatch("mu_member: matrix is " + std::to_string(psi.rows()) + "x" +
                            std::to_string(psi.cols()) + ", cone expects " + std::to_string(m.N) + "x" +
                            std::to_string(m.cols()));
  MuMembership res;
  res.member = true;
  Matrix gens = m.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int s = mat_vec(psi, gens[i]).sign();
    res.signs.push_back(s);
    if (s > 0) res.member = false;
    if (s == 0) res.tight.push_back(i);
  }
  return res;
}

bool mu_contains(const MuCone& m, const WeightMatrix& psi) { return mu_member(m, psi).member; }

std::size_t mu_dim(const MuCone& m) { return m.N * (m.cols() - m.copolar.lineality().size()); }

PolyCone euclidean_closure(const MuCone& m) {
  const std::size_t r = m.cols();
  const std::size_t big = m.N * r;
  Matrix normals;
  auto lift = [&](std::size_t row, const Vec& v) {
    Vec x = zeros(big);
    for (std::size_t j = 0; j < r; ++j) x[row * r + j] = v[j];
    return x;
  };
  for (std::size_t row = 0; row < m.N; ++row)
    for (const auto& l : m.copolar.lineality()) {
      normals.push_back(lift(row, l));
      normals.push_back(lift(row, negate(l)));
    }
  for (const auto& v : m.copolar.rays()) normals.push_back(lift(0, v));
  return PolyCone::from_normals(big, normals);
}

MuCone mu_face(const MuCone& m, const Vec& u) {
  Matrix g = m.generators();
  if (!m.copolar.contains(u)) throw DomainError("mu_face: u = " + to_string(u) + " is not in the co-polar cone");
  g.push_back(u);
  g.push_back(negate(u));
  return MuCone{m.N, PolyCone::from_generators(m.cols(), g)};
}

MuCone mu_intersection(const MuCone& a, const MuCone& b) {
  if (a.N != b.N) throw DimensionMismatch("mu_intersection: row counts differ");
  return MuCone{a.N, cone_sum(a.copolar, b.copolar)};
}

}  // namespace gkz
