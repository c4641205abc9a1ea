#include "fixtures.hpp"

#include "gkz/errors.hpp"
#include "gkz/linalg.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gkz;
using namespace gkz::testing;

TEST_CASE("rationals parse to canonical form and print back") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-10/5")) == "-2");
  CHECK(to_string(parse_rat("+7")) == "7");
  CHECK(parse_rat("0/9") == 0);
  for (const char* s : {"1/3", "-5/7", "12", "0", "-1"}) CHECK(to_string(parse_rat(s)) == s);
  CHECK_THROWS_AS(parse_rat("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rat("abc"), SchemaError);
  CHECK_THROWS_AS(parse_rat("1.5"), SchemaError);
  CHECK_THROWS_AS(parse_rat(""), SchemaError);
}

TEST_CASE("vector helpers") {
  Vec a{1, frac(1, 2), -3};
  Vec b{0, frac(1, 2), 1};
  CHECK(dot(a, b) == frac(-11, 4));
  CHECK(add(a, b) == Vec{1, 1, -2});
  CHECK(sub(a, b) == Vec{1, 0, -4});
  CHECK(primitive(Vec{frac(2, 3), frac(-4, 3), 0}) == Vec{1, -2, 0});
  CHECK(lcm_of_denominators(Vec{frac(1, 4), frac(1, 6)}) == 12);
  CHECK_THROWS_AS(dot(a, Vec{1}), DimensionMismatch);
}

TEST_CASE("lexicographic order has the first coordinate most significant") {
  CHECK(LexVec{0, 1} < LexVec{1, 0});
  CHECK(LexVec{0, -5} < LexVec{0, 0});
  CHECK(LexVec{frac(1, 2), 100} < LexVec{1, -100});
  CHECK(LexVec{0, 0, 0}.sign() == 0);
  CHECK(LexVec{0, -1, 5}.sign() == -1);
  CHECK(LexVec{0, -1, 5}.leading_index() == 1);
  CHECK_THROWS_AS((void)(LexVec{1} < LexVec{1, 2}), DimensionMismatch);
}

TEST_CASE("lex order is a total order compatible with addition and positive scaling") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    LexVec a(random_vec(rng, 3, 2)), b(random_vec(rng, 3, 2)), c(random_vec(rng, 3, 2));
    int ab = (a < b) + (a == b) + (a > b);
    CHECK(ab == 1);
    if (a <= b && b <= c) CHECK(a <= c);
    CHECK(((a < b) == (a + c < b + c)));
    Rat s = frac(uniform(rng, 1, 5), uniform(rng, 1, 5));
    CHECK(((a < b) == (a * s < b * s)));
    CHECK(((a < b) == (-b < -a)));
    CHECK(((a - b).sign() < 0) == (a < b));
  }
}

TEST_CASE("lex extrema agree with sorting") {
  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    std::vector<LexVec> family;
    for (int k = 0; k < 6; ++k) family.emplace_back(random_vec(rng, 2, 2));
    auto sorted = family;
    std::sort(sorted.begin(), sorted.end());
    CHECK(lex_min_vertex(family) == sorted.front());
    CHECK(lex_max_vertex(family) == sorted.back());
  }
  CHECK_THROWS_AS(lex_min_vertex(std::vector<LexVec>{}), DomainError);
}

TEST_CASE("infinity absorbs addition and dominates every vector") {
  LexValue inf = LexValue::infinity();
  LexValue x(LexVec{100, 100});
  CHECK(x < inf);
  CHECK((inf + x).is_infinite());
  CHECK(inf == LexValue::infinity());
  CHECK_THROWS_AS(inf.vec(), DomainError);
}

TEST_CASE("weight matrices act on columns") {
  WeightMatrix psi = running_psi();
  CHECK(psi.rows() == 2);
  CHECK(psi.cols() == 5);
  CHECK(psi.column(2) == LexVec{2, 1});
  Vec e = unit(5, 4);
  CHECK(mat_vec(psi, e) == LexVec{1, 1});
  CHECK(mat_vec(psi, Vec{1, 1, 0, 0, 0}) == LexVec{1, 1});
  CHECK_THROWS_AS(mat_vec(psi, Vec{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(WeightMatrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
  WeightMatrix e2 = WeightMatrix::embed_row(Vec{1, 2}, 3);
  CHECK(e2.row(0) == Vec{1, 2});
  CHECK(is_zero(e2.row(2)));
}

TEST_CASE("linear algebra identities") {
  Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(m) == 18);
  auto inv = inverse(m);
  REQUIRE(inv);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += m[i][k] * (*inv)[k][j];
      CHECK(s == (i == j ? 1 : 0));
    }
  Matrix sing{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(sing, 3) == 1);
  Matrix ns = nullspace(sing, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(v, sing[0]) == 0);
  CHECK(!inverse(Matrix{{1, 2}, {2, 4}}));
  auto x = solve(m, Vec{1, 2, 3}, 3);
  REQUIRE(x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dot(m[i], *x) == Vec{1, 2, 3}[i]);
}

namespace {

/// Brute force optimum of a bounded 2-variable LP by intersecting constraint pairs.
std::optional<Rat> vertex_oracle(const Matrix& a, const Vec& b, const Vec& c) {
  std::optional<Rat> best;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto x = solve(Matrix{a[i], a[j]}, Vec{b[i], b[j]}, 2);
      if (!x || rank(Matrix{a[i], a[j]}, 2) < 2) continue;
      bool feasible = true;
      for (std::size_t k = 0; k < a.size(); ++k) feasible = feasible && dot(a[k], *x) <= b[k];
      if (feasible && (!best || dot(c, *x) > *best)) best = dot(c, *x);
    }
  return best;
}

}  // namespace

TEST_CASE("exact LP agrees with vertex enumeration on bounded problems") {
  Rng rng(2024);
  int infeasible = 0;
  for (int it = 0; it < 150; ++it) {
    Matrix a{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    Vec b{5, 5, 5, 5};
    for (int k = 0; k < 3; ++k) {
      a.push_back(random_vec(rng, 2, 4));
      b.push_back(random_rat(rng, 6, 3));
    }
    Vec c = random_vec(rng, 2, 5);
    LinearProgram lp(2);
    lp.set_all_free();
    for (std::size_t k = 0; k < a.size(); ++k) lp.add_constraint(a[k], Relation::LessEq, b[k]);
    lp.maximize(c);
    LpResult res = lp.solve();
    auto oracle = vertex_oracle(a, b, c);
    if (!oracle) {
      CHECK(res.status == LpStatus::Infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == *oracle);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(dot(a[k], res.x) <= b[k]);
  }
  CHECK(infeasible < 150);
}

TEST_CASE("LP detects infeasible and unbounded problems and honours sign constraints") {
  LinearProgram inf(1);
  inf.add_constraint({1}, Relation::LessEq, -1);
  CHECK(inf.solve().status == LpStatus::Infeasible);

  LinearProgram unb(2);
  unb.set_free(0);
  unb.add_constraint({0, 1}, Relation::LessEq, 3);
  unb.maximize({-1, 1});
  CHECK(unb.solve().status == LpStatus::Unbounded);

  LinearProgram nonneg(1);
  nonneg.maximize({-1});
  LpResult r = nonneg.solve();
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.objective == 0);

  LinearProgram eq(3);
  eq.add_constraint({1, 1, 1}, Relation::Equal, 1);
  eq.add_constraint({1, -1, 0}, Relation::GreaterEq, frac(1, 3));
  eq.maximize({0, 1, 0});
  LpResult e = eq.solve();
  CHECK(e.status == LpStatus::Optimal);
  CHECK(e.objective == frac(1, 3));
}
