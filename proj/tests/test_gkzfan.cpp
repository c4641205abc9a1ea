#include "fixtures.hpp"

#include "gkz/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gkz;
using namespace gkz::testing;

namespace {

PointConfig mother_config() { return PointConfig(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}}); }

MarkedSubdivision mother_triangulation() {
  std::vector<MarkedCell> cells;
  for (IndexSet t : {IndexSet{0, 1, 4}, IndexSet{0, 3, 4}, IndexSet{1, 2, 5}, IndexSet{1, 4, 5}, IndexSet{0, 2, 3},
                     IndexSet{2, 3, 5}, IndexSet{3, 4, 5}})
    cells.push_back({t, t});
  return MarkedSubdivision(cells);
}

/// Adds the affine function c0 + c . chi to row `row`.
WeightMatrix add_affine(const PointConfig& cfg, const WeightMatrix& psi, std::size_t row, const Vec& c) {
  WeightMatrix out = psi;
  for (Index j = 0; j < cfg.size(); ++j) out.set(row, j, psi.at(row, j) + dot(c, cfg.homogenized(j)));
  return out;
}

}  // namespace

TEST_CASE("condition cones of the simplex example") {
  PointConfig cfg = simplex_config();
  Vec u = simplex_u();
  CHECK(condition_cone(cfg, simplex_q1()).cone == PolyCone::from_generators(4, {u}));
  CHECK(condition_cone(cfg, simplex_q2()).cone == PolyCone::from_generators(4, {negate(u)}));
  CHECK(condition_cone(cfg, simplex_q0()).cone == PolyCone::from_generators(4, {u, negate(u)}));
  for (const auto& s : {simplex_q0(), simplex_q1(), simplex_q2()})
    CHECK(condition_cone_full(cfg, s) == condition_cone(cfg, s).cone);
}

TEST_CASE("condition vectors express a point in an affine basis") {
  PointConfig cfg = simplex_config();
  IndexSet basis = affine_basis(cfg, {0, 1, 2, 3});
  CHECK(basis == IndexSet{0, 1, 2});
  Vec c = condition_vector(cfg, basis, 3);
  CHECK(primitive(c) == simplex_u());
  Rat total = 0;
  for (const auto& x : c) total += x;
  CHECK(total == 0);
}

TEST_CASE("reduced and full condition cones coincide on enumerated subdivisions") {
  for (const auto& cfg : {running_config(), square_center_config()}) {
    for (const auto& s : enumerate_subdivisions(cfg)) {
      ConditionCone cc = condition_cone(cfg, s);
      CHECK(condition_cone_full(cfg, s) == cc.cone);
      for (const auto& g : cc.generators()) CHECK(cc.cone.contains(g));
    }
  }
}

TEST_CASE("subdivide recovers the running example") {
  PointConfig cfg = running_config();
  WeightMatrix psi = running_psi();
  MarkedSubdivision s = subdivide(cfg, psi);
  CHECK(s == running_subdivision());
  CHECK(open_member(cfg, psi, s));
  CHECK(open_member_by_signs(condition_cone(cfg, s), psi));
  CHECK(closed_member(cfg, psi, s).member);
  CHECK(!open_member(cfg, psi, trivial_subdivision(cfg)));
  CHECK(subdivide(cfg, WeightMatrix(2, 5)) == trivial_subdivision(cfg));
  CHECK_THROWS_AS(subdivide(cfg, WeightMatrix(1, 4)), DimensionMismatch);
}

TEST_CASE("zero matrix is in every closed cone but only the trivial open cone") {
  PointConfig cfg = simplex_config();
  WeightMatrix zero(2, 4);
  for (const auto& s : {simplex_q0(), simplex_q1(), simplex_q2()}) CHECK(closed_member(cfg, zero, s).member);
  CHECK(open_member_by_signs(condition_cone(cfg, simplex_q0()), zero));
  CHECK(!open_member_by_signs(condition_cone(cfg, simplex_q1()), zero));
  CHECK(!open_member_by_signs(condition_cone(cfg, simplex_q2()), zero));
}

TEST_CASE("rank-one lifts of the interior point select the three subdivisions") {
  PointConfig cfg = simplex_config();
  CHECK(subdivide(cfg, WeightMatrix::from_rows({{0, 0, 0, 1}})) == simplex_q2());
  CHECK(subdivide(cfg, WeightMatrix::from_rows({{0, 0, 0, -1}})) == simplex_q1());
  CHECK(subdivide(cfg, WeightMatrix::from_rows({{0, 0, 0, 0}})) == simplex_q0());
  CHECK(subdivide(cfg, WeightMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 0, 1}})) == simplex_q2());
  CHECK(subdivide(cfg, WeightMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 0, -1}})) == simplex_q1());
}

TEST_CASE("g_Psi agrees with the affine formulas and the fiber LP") {
  PointConfig cfg = running_config();
  WeightMatrix psi = running_psi();
  CHECK(g_eval(cfg, psi, {1, -1}) == LexVec{frac(3, 2), frac(1, 2)});
  CHECK(g_eval(cfg, psi, {1, 2}) == LexVec{frac(3, 2), 1});
  Rng rng(99);
  for (int it = 0; it < 20; ++it) {
    Vec w{Rat(uniform(rng, 1, 4)), random_rat(rng, 8, 3)};
    if (w[1] < -2 * w[0] || w[1] > 4 * w[0]) continue;
    CHECK(g_eval(cfg, psi, w) == g_eval_fiber(cfg, psi, w));
  }
  PointConfig sq = square_center_config();
  for (int it = 0; it < 15; ++it) {
    WeightMatrix p = random_psi(rng, 1 + it % 3, sq.size());
    Vec w{1, frac(uniform(rng, 0, 8), 4), frac(uniform(rng, 0, 8), 4)};
    CHECK(g_eval(sq, p, w) == g_eval_fiber(sq, p, w));
  }
  CHECK_THROWS_AS(g_eval(cfg, psi, {1, 5}), DomainError);
}

TEST_CASE("piecewise linear map is continuous across shared faces") {
  PointConfig cfg = running_config();
  PiecewiseLinearMap plm(cfg, running_psi(), running_subdivision());
  CHECK(plm.cells_containing({1, 0}).size() == 2);
  CHECK(mat_vec(plm.cell_map(0), Vec{1, 0}) == mat_vec(plm.cell_map(1), Vec{1, 0}));
  CHECK(plm.eval({2, -2}) == plm.eval({1, -1}) * 2);
  CHECK(!plm.in_support({1, 5}));
}

TEST_CASE("enumeration of the simplex example") {
  PointConfig cfg = simplex_config();
  auto all = enumerate_subdivisions(cfg);
  CHECK(all.size() == 3);
  auto reg = enumerate_regular_subdivisions(cfg);
  CHECK(reg.size() == 3);
  for (const auto& s : reg) {
    auto h = regular_height(cfg, s);
    REQUIRE(h);
    CHECK(subdivide(cfg, WeightMatrix::embed_row(*h, 1)) == s);
  }
  CHECK_THROWS_AS(enumerate_subdivisions(cfg, 1), BudgetExceeded);
}

TEST_CASE("enumeration matches random sampling on the running example") {
  PointConfig cfg = running_config();
  auto reg = enumerate_regular_subdivisions(cfg);
  CHECK(reg.size() == 27);
  auto sampled = sample_regular_subdivisions(cfg, 4000, 7);
  for (const auto& s : sampled) CHECK(std::find(reg.begin(), reg.end(), s) != reg.end());
  CHECK(sampled.size() == reg.size());
}

TEST_CASE("a segment with two points has one subdivision") {
  PointConfig seg(1, {{0}, {1}});
  CHECK(enumerate_regular_subdivisions(seg).size() == 1);
}

TEST_CASE("the twisted triangulation is not regular") {
  PointConfig cfg = mother_config();
  MarkedSubdivision t = mother_triangulation();
  REQUIRE(validate_subdivision(cfg, t).ok());
  CHECK(is_triangulation(cfg, t));
  CHECK(!is_regular(cfg, t));
  CHECK(!regular_height(cfg, t));
  auto all = enumerate_subdivisions(cfg);
  auto reg = enumerate_regular_subdivisions(cfg);
  CHECK(std::find(all.begin(), all.end(), t) != all.end());
  CHECK(std::find(reg.begin(), reg.end(), t) == reg.end());
  CHECK(reg.size() < all.size());
  for (const auto& s : reg) CHECK(is_regular(cfg, s));
}

TEST_CASE("elementary moves preserve the induced subdivision") {
  Rng rng(4);
  for (const auto& cfg : {running_config(), simplex_config(), square_center_config()}) {
    for (int it = 0; it < 10; ++it) {
      WeightMatrix psi = random_psi(rng, 1 + it % 3, cfg.size());
      MarkedSubdivision s = subdivide(cfg, psi);
      for (const auto& m : elementary_moves(psi)) CHECK(subdivide(cfg, m) == s);
      CHECK(subdivide(cfg, add_affine(cfg, psi, it % psi.rows(), random_vec(rng, cfg.n(), 3))) == s);
    }
  }
  WeightMatrix psi = running_psi();
  CHECK_THROWS_AS(scale_row(psi, 0, 0), DomainError);
  CHECK_THROWS_AS(scale_row(psi, 0, -1), DomainError);
  CHECK_THROWS_AS(add_row_multiple(psi, 1, 0, 1), DomainError);
}

TEST_CASE("open cones have full dimension") {
  PointConfig cfg = simplex_config();
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(cone_dim(cfg, simplex_q1(), n) == 4 * n);
    CHECK(cone_dim(cfg, simplex_q2(), n) == 4 * n);
    CHECK(cone_dim(cfg, simplex_q0(), n) == 3 * n);
  }
}
