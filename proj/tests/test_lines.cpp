#include <catch2/catch_amalgamated.hpp>

#include "tropcubics/lines.hpp"

#include "fixtures.hpp"

using namespace tropcubics;

namespace {

Pluecker pl(const std::array<long long, 6>& v) {
  Pluecker p;
  for (int m = 0; m < 6; ++m) p[m] = Rat(v[static_cast<std::size_t>(m)]);
  return p;
}

} // namespace

TEST_CASE("pair index table") {
  REQUIRE(pair_index(0, 1) == 0);
  REQUIRE(pair_index(3, 2) == 5);
  REQUIRE_THROWS_AS(pair_index(1, 1), domain_error);
}

TEST_CASE("tropical Pluecker relation") {
  REQUIRE(is_pluecker(pl({0, 0, 0, 0, 0, 0})));
  REQUIRE(line_type(pl({0, 0, 0, 0, 0, 0})) == LineType::degenerate);
  REQUIRE_FALSE(is_pluecker(pl({0, 1, 1, 1, 1, 1})));
  REQUIRE_THROWS_AS(line_type(pl({0, 1, 1, 1, 1, 1})), domain_error);
}

TEST_CASE("relation is invariant under global shifts") {
  Pluecker p = pl({26, 6, 17, 7, 18, 0});
  REQUIRE(is_pluecker(p));
  Pluecker q = p;
  for (auto& v : q) v += Rat(5, 3);
  REQUIRE(is_pluecker(q));
  REQUIRE(line_type(q) == line_type(p));
}

TEST_CASE("vertices of a split line") {
  Pluecker p = pl({0, 0, 1, 1, 0, 0});
  LineVertices lv = line_vertices(p);
  REQUIRE(lv.type == LineType::t03_12);
  REQUIRE(lv.first_rays == std::array<int, 2>{0, 3});
  REQUIRE(lv.second_rays == std::array<int, 2>{1, 2});
  REQUIRE(eq_mod_ones(lv.first, fixtures::qvec({1, 0, 0, 1})));
  REQUIRE(eq_mod_ones(lv.second, fixtures::qvec({0, 1, 1, 0})));
}

TEST_CASE("vertex computation conjugates along permutations") {
  Pluecker p = pl({0, 0, 1, 1, 0, 0});
  Perm4 swap23 = {0, 1, 3, 2};
  Pluecker q = apply_perm_pluecker(swap23, p);
  REQUIRE(line_type(q) == LineType::t02_13);
  LineVertices lv = line_vertices(q);
  REQUIRE(eq_mod_ones(lv.first, fixtures::qvec({1, 0, 1, 0})));
  REQUIRE(eq_mod_ones(lv.second, fixtures::qvec({0, 1, 0, 1})));
}

TEST_CASE("line through two vertices") {
  Pluecker p = pluecker_from_vertices(fixtures::qvec({19, 20, 0, 11}),
                                      fixtures::qvec({17, 18, 0, 11}));
  REQUIRE(p == pl({37, 17, 28, 18, 29, 11}));
  REQUIRE(eq_mod_constant(p, pl({26, 6, 17, 7, 18, 0})));
}

TEST_CASE("vertices and spans are mutually inverse up to a shift") {
  for (const auto& coords :
       {std::array<long long, 6>{26, 6, 17, 7, 18, 0},
        std::array<long long, 6>{0, 0, 1, 1, 0, 0},
        std::array<long long, 6>{5, 0, 0, 0, 0, 5}}) {
    Pluecker p = pl(coords);
    REQUIRE(is_pluecker(p));
    REQUIRE(line_type(p) != LineType::degenerate);
    LineVertices lv = line_vertices(p);
    REQUIRE(eq_mod_constant(pluecker_from_vertices(lv.first, lv.second), p));
  }
}

TEST_CASE("torus representatives") {
  REQUIRE(eq_mod_ones(fixtures::qvec({1, 2, 3, 4}), fixtures::qvec({0, 1, 2, 3})));
  REQUIRE_FALSE(eq_mod_ones(fixtures::qvec({1, 2, 3, 4}), fixtures::qvec({0, 1, 2, 4})));
  REQUIRE(normalize_x2(fixtures::qvec({3, 4, 2, 5})) == fixtures::qvec({1, 2, 0, 3}));
}
