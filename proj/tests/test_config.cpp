#include "fixtures.hpp"

#include "gkz/errors.hpp"

#include <doctest.h>

using namespace gkz;
using namespace gkz::testing;

TEST_CASE("point configurations are validated") {
  CHECK_THROWS_AS(PointConfig(1, {{0}, {0}}), SchemaError);
  CHECK_THROWS_AS(PointConfig(2, {{0, 0}, {1, 1}, {2, 2}}), SchemaError);
  CHECK_THROWS_AS(PointConfig(1, {{frac(1, 2)}, {1}}), SchemaError);
  CHECK_THROWS_AS(PointConfig(2, {{0, 0}, {1}}), DimensionMismatch);
  PointConfig cfg = simplex_config();
  CHECK(cfg.n() == 3);
  CHECK(cfg.homogenized(3) == Vec{1, 1, 1});
}

TEST_CASE("hull of the simplex example") {
  PointConfig cfg = simplex_config();
  Hull h = hull_faces(cfg);
  CHECK(h.affine_dim == 2);
  CHECK(h.vertices == IndexSet{0, 1, 2});
  CHECK(h.facets.size() == 3);
  CHECK(h.in_relative_interior(cfg.point(3)));
  CHECK(!h.in_relative_interior(cfg.point(0)));
  CHECK(points_in_hull(cfg, hull_faces(cfg, {0, 1, 3})) == IndexSet{0, 1, 3});
  CHECK(affine_rank(cfg, {0, 3}) == 2);
}

TEST_CASE("the three subdivisions of the simplex example are valid") {
  PointConfig cfg = simplex_config();
  for (const auto& s : {simplex_q0(), simplex_q1(), simplex_q2()}) CHECK(validate_subdivision(cfg, s).ok());
  CHECK(!is_triangulation(cfg, simplex_q0()));
  CHECK(is_triangulation(cfg, simplex_q1()));
  CHECK(is_triangulation(cfg, simplex_q2()));
  CHECK(trivial_subdivision(cfg) == simplex_q0());
}

TEST_CASE("refinement order on the simplex example") {
  PointConfig cfg = simplex_config();
  CHECK(refines(cfg, simplex_q1(), simplex_q0()));
  CHECK(refines(cfg, simplex_q2(), simplex_q0()));
  CHECK(!refines(cfg, simplex_q0(), simplex_q1()));
  CHECK(!refines(cfg, simplex_q1(), simplex_q2()));
  CHECK(!refines(cfg, simplex_q2(), simplex_q1()));
  CHECK(refines(cfg, simplex_q2(), simplex_q2()));
}

TEST_CASE("violations are detected with their codes") {
  PointConfig sq = square_center_config();
  SUBCASE("overlapping cells") {
    MarkedSubdivision s({{{0, 1, 3}, {0, 1, 3}}, {{0, 2, 3}, {0, 2, 3}}, {{0, 1, 2}, {0, 1, 2}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::NotFaceToFace));
  }
  SUBCASE("T-junction") {
    PointConfig cfg(2, {{0, 0}, {2, 0}, {1, 1}, {1, -1}, {1, 0}});
    MarkedSubdivision s({{{0, 2, 4}, {0, 2, 4}}, {{1, 2, 4}, {1, 2, 4}}, {{0, 1, 3}, {0, 1, 3, 4}}});
    CHECK(validate_subdivision(cfg, s).has(ViolationCode::NotFaceToFace));
    MarkedSubdivision fixed({{{0, 2, 4}, {0, 2, 4}}, {{1, 2, 4}, {1, 2, 4}}, {{0, 3, 4}, {0, 3, 4}},
                             {{1, 3, 4}, {1, 3, 4}}});
    CHECK(validate_subdivision(cfg, fixed).ok());
  }
  SUBCASE("marking mismatch on a shared edge") {
    PointConfig cfg(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    MarkedSubdivision s({{{0, 1, 2}, {0, 1, 2, 4}}, {{1, 2, 3}, {1, 2, 3}}});
    CHECK(validate_subdivision(cfg, s).has(ViolationCode::MarkingMismatch));
    MarkedSubdivision ok({{{0, 1, 2}, {0, 1, 2, 4}}, {{1, 2, 3}, {1, 2, 3, 4}}});
    CHECK(validate_subdivision(cfg, ok).ok());
  }
  SUBCASE("not covering") {
    MarkedSubdivision s({{{0, 1, 4}, {0, 1, 4}}, {{0, 2, 4}, {0, 2, 4}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::NotCovering));
  }
  SUBCASE("not full-dimensional") {
    MarkedSubdivision s({{{0, 3, 4}, {0, 3, 4}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::NotFullDimensional));
  }
  SUBCASE("listed vertex that is not a vertex") {
    MarkedSubdivision s({{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::NotAVertex));
  }
  SUBCASE("marking misses a vertex") {
    MarkedSubdivision s({{{0, 1, 2, 3}, {0, 1, 2}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::MarkingMissesVertex));
  }
  SUBCASE("marking outside the cell") {
    MarkedSubdivision s({{{0, 1, 4}, {0, 1, 2, 4}}, {{0, 2, 4}, {0, 2, 4}}, {{1, 3, 4}, {1, 3, 4}},
                         {{2, 3, 4}, {2, 3, 4}}});
    CHECK(validate_subdivision(sq, s).has(ViolationCode::MarkingOutsideCell));
  }
  SUBCASE("index out of range and empty") {
    CHECK(validate_subdivision(sq, MarkedSubdivision({{{0, 1, 9}, {0, 1, 9}}})).has(ViolationCode::IndexOutOfRange));
    CHECK(validate_subdivision(sq, MarkedSubdivision()).has(ViolationCode::Empty));
  }
}

TEST_CASE("cell volumes sum to the volume of the hull") {
  PointConfig sq = square_center_config();
  MarkedSubdivision four({{{0, 1, 4}, {0, 1, 4}}, {{0, 2, 4}, {0, 2, 4}}, {{1, 3, 4}, {1, 3, 4}},
                          {{2, 3, 4}, {2, 3, 4}}});
  REQUIRE(validate_subdivision(sq, four).ok());
  Rat total = 0;
  for (const auto& c : four.cells()) total += normalized_volume(sq, c.vertices);
  CHECK(total == normalized_volume(sq, {0, 1, 2, 3}));
  CHECK(total == 8);
  CHECK(simplex_volume(sq, {0, 1, 4}) == 2);
  auto pulled = pulling_triangulation(sq, {0, 1, 2, 3});
  CHECK(pulled.size() == 2);
  PointConfig cfg = simplex_config();
  Rat q2 = 0;
  MarkedSubdivision q2s = simplex_q2();
  for (const auto& c : q2s.cells()) q2 += normalized_volume(cfg, c.vertices);
  CHECK(q2 == 9);
}

TEST_CASE("the running example subdivision") {
  PointConfig cfg = running_config();
  MarkedSubdivision s = running_subdivision();
  CHECK(validate_subdivision(cfg, s).ok());
  CHECK(is_triangulation(cfg, s));
  CHECK(s.marked_points() == IndexSet{0, 2, 4});
  CHECK(to_string(s, cfg).find("-2") != std::string::npos);
  MarkedSubdivision gap({{{0, 2}, {0, 2}}, {{3, 4}, {3, 4}}});
  CHECK(validate_subdivision(cfg, gap).has(ViolationCode::NotCovering));
}
