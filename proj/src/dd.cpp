#include "gkz/dd.hpp"

#include "gkz/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace gkz {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  Vec z;
  Bits zero;
};

// Extreme rays of the pointed cone {z : m z <= 0}, m of full column rank k.
Matrix pointed_rays(const Matrix& m, std::size_t k) {
  const std::size_t nrows = m.size();
  std::vector<std::size_t> init = independent_rows(m, k);
  if (init.size() != k) throw DomainError("dd: constraint matrix is not of full column rank");
  Matrix square;
  for (auto i : init) square.push_back(m[i]);
  Matrix inv = *inverse(square);

  std::vector<Ray> rays;
  for (std::size_t c = 0; c < k; ++c) {
    Ray r{zeros(k), Bits(nrows)};
    for (std::size_t i = 0; i < k; ++i) r.z[i] = -inv[i][c];
    r.z = primitive(r.z);
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) r.zero.set(init[t]);
    rays.push_back(std::move(r));
  }
  std::vector<bool> done(nrows, false);
  for (auto i : init) done[i] = true;

  for (std::size_t row = 0; row < nrows; ++row) {
    if (done[row]) continue;
    done[row] = true;
    const Vec& a = m[row];
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].z);
      int s = sgn(val[i]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(i);
    }
    if (pos.empty()) {
      for (auto i : zer) rays[i].zero.set(row);
      continue;
    }
    std::vector<Ray> next;
    for (auto i : neg) next.push_back(rays[i]);
    for (auto i : zer) {
      next.push_back(rays[i]);
      next.back().zero.set(row);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (k >= 2 && common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.subset_of(rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{primitive(sub(scale(rays[n].z, val[p]), scale(rays[p].z, val[n]))), common};
        r.zero.set(row);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  Matrix out;
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace

ConeGenerators cone_from_inequalities(std::size_t dim, const Matrix& rows) {
  Matrix a;
  for (const auto& r : rows) {
    if (r.size() != dim) throw DimensionMismatch("cone: vector of length " + std::to_string(r.size()) +
                                                 " in ambient dimension " + std::to_string(dim));
    if (!is_zero(r)) a.push_back(r);
  }
  ConeGenerators g;
  g.lineality = nullspace(a, dim);
  Matrix basis = canonical_basis(a, dim);
  const std::size_t k = basis.size();
  if (k == 0) return g;

  Matrix m;
  for (const auto& r : a) {
    Vec z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = dot(r, basis[j]);
    m.push_back(std::move(z));
  }
  for (const auto& z : pointed_rays(m, k)) {
    Vec x = zeros(dim);
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(z[j]) != 0) x = add(x, scale(basis[j], z[j]));
    g.rays.push_back(primitive(x));
  }
  std::sort(g.rays.begin(), g.rays.end(), vec_less);
  g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
  return g;
}

}  // namespace gkz
