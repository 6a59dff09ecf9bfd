#include <catch2/catch_amalgamated.hpp>

#include "tropcubics/surface.hpp"

#include "fixtures.hpp"

using namespace tropcubics;

TEST_CASE("form evaluation and minimizing terms") {
  const QVec& C = fixtures::honeycomb_heights();
  QVec q23 = fixtures::qvec({0, 1, -17, -6});
  REQUIRE(form_value(C, 16, fixtures::qvec({0, 0, 0, 0})) == 0);
  REQUIRE(attaining_forms(C, q23) == std::vector<int>{14, 15, 18});
  REQUIRE(point_on_surface(C, q23));

  QVec along = q23;
  along[3] += Rat(1, 2);
  REQUIRE(attaining_forms(C, along) == std::vector<int>{15, 18});
  REQUIRE(point_on_surface(C, along));

  QVec off = fixtures::qvec({0, -100, 0, 0});
  REQUIRE(attaining_forms(C, off) == std::vector<int>{19});
  REQUIRE_FALSE(point_on_surface(C, off));
}

TEST_CASE("height vectors induce the reference triangulations") {
  REQUIRE(normalized(dual_subdivision(fixtures::example_heights())) ==
          fixtures::example_facets());
  REQUIRE(normalized(dual_subdivision(fixtures::honeycomb_heights())) ==
          fixtures::honeycomb_facets());
}

TEST_CASE("zero heights induce the trivial subdivision") {
  QVec zeros(20, Rat(0));
  auto cells = dual_subdivision(zeros);
  REQUIRE(cells.size() == 1);
  REQUIRE(cells[0].size() == 20);
  REQUIRE_FALSE(is_smooth(zeros));
}

TEST_CASE("smoothness of the reference heights") {
  REQUIRE(is_smooth(fixtures::example_heights()));
  REQUIRE(is_smooth(fixtures::honeycomb_heights()));
}

TEST_CASE("fold form of an interior triangle") {
  IVec form = fold_form(fixtures::example_facets(), {5, 9, 11});
  IVec expect(20, 0);
  expect[1] = 1;
  expect[2] = 1;
  expect[5] = -3;
  expect[9] = 1;
  REQUIRE(form == expect);
  REQUIRE_THROWS_AS(fold_form(fixtures::example_facets(), {0, 1, 4}),
                    domain_error);
}

TEST_CASE("secondary cone of the example") {
  Cone K = secondary_cone(fixtures::example_facets());
  REQUIRE(K.n == 20);
  REQUIRE(K.ineqs.size() == 36);
  for (const auto& a : K.ineqs)
    REQUIRE(dot(a, fixtures::example_heights()) > 0);

  // one row of exponents per coordinate spans the lineality space
  for (std::size_t f = 0; f < 4; ++f) {
    IVec v(20);
    for (std::size_t i = 0; i < 20; ++i) v[i] = kCubicExponents[i][f];
    for (const auto& a : K.ineqs) REQUIRE(dot(a, v) == 0);
  }
  REQUIRE(lineality_dim(K) == 4);

  Cone F = facet_description(K);
  REQUIRE(F.ineqs.size() == 16);
  REQUIRE(F.eqs.empty());
}

TEST_CASE("dual vertex of a cell") {
  QVec v = vertex_of_tetra(fixtures::honeycomb_heights(), {5, 8, 14, 15});
  REQUIRE(v == fixtures::qvec({0, 10, -19, -8}));
  REQUIRE(attaining_forms(fixtures::honeycomb_heights(), v) ==
          std::vector<int>{5, 8, 14, 15});
  REQUIRE_THROWS_AS(vertex_of_tetra(fixtures::honeycomb_heights(), {0, 1, 2, 3}),
                    domain_error);
}

TEST_CASE("smallest interior integer heights recover the triangulation") {
  Cone K = secondary_cone(fixtures::example_facets());
  auto x = min_sum_integer_point(K);
  REQUIRE(x.has_value());
  Int sum = 0;
  QVec q;
  for (const auto& c : *x) {
    sum += c;
    q.emplace_back(c);
  }
  REQUIRE(sum <= 260);
  REQUIRE(normalized(dual_subdivision(q)) == fixtures::example_facets());
}
