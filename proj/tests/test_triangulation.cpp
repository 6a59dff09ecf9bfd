#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "tropcubics/triangulation.hpp"

#include "fixtures.hpp"

using namespace tropcubics;

namespace {

// Lexicographic minimum over all rotations and the two orientations.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  std::vector<int> best = cycle;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t s = 0; s < cycle.size(); ++s) {
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      best = std::min(best, cycle);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

} // namespace

TEST_CASE("cell volumes in the unimodular chart") {
  REQUIRE(tetra_volume({0, 1, 4, 10}) == 1);
  REQUIRE(tetra_volume({0, 3, 9, 19}) == 27);
  REQUIRE(tetra_volume({0, 1, 2, 3}) == 0);
}

TEST_CASE("reference triangulations validate") {
  REQUIRE_NOTHROW(validate(fixtures::example_facets()));
  REQUIRE_NOTHROW(validate(fixtures::honeycomb_facets()));
}

TEST_CASE("broken incidences are rejected") {
  Triangulation bad = fixtures::example_facets();
  REQUIRE(bad[0] == Cell{0, 1, 4, 10});
  bad[0] = {0, 1, 4, 11};
  REQUIRE_THROWS_AS(validate(bad), domain_error);

  Triangulation missing(fixtures::example_facets().begin(),
                        fixtures::example_facets().end() - 1);
  REQUIRE_THROWS_AS(validate(missing), domain_error);
}

TEST_CASE("face counts of a full unimodular triangulation") {
  for (const Triangulation& T :
       {fixtures::example_facets(), fixtures::honeycomb_facets()}) {
    REQUIRE(f_vector(T) == std::array<std::size_t, 4>{20, 64, 72, 27});
    REQUIRE(boundary_f_vector(T) == std::array<std::size_t, 3>{20, 54, 36});
    REQUIRE(interior_edges(T).size() == 10);
  }
}

TEST_CASE("edge links of the example match the reference cycles") {
  const Triangulation& T = fixtures::example_facets();
  REQUIRE(fixtures::example_links().size() == 10);
  auto edges = interior_edges(T);
  std::set<Cell> interior(edges.begin(), edges.end());
  for (const auto& row : fixtures::example_links()) {
    Cell edge = {row.edge[0], row.edge[1]};
    REQUIRE(interior.count(edge) == 1);
    auto cycle = link_of_edge(T, edge);
    REQUIRE(canonical_cycle(cycle) == canonical_cycle(row.cycle));
  }
}

TEST_CASE("link lookup fails on boundary edges") {
  REQUIRE_THROWS_AS(link_of_edge(fixtures::example_facets(), Cell{0, 1}),
                    domain_error);
}

TEST_CASE("gkz vector of the example matches the reference value") {
  auto g = gkz_vector(fixtures::example_facets());
  for (std::size_t i = 0; i < 20; ++i)
    REQUIRE(g[i] == fixtures::example_gkz()[i]);
}

TEST_CASE("gkz entries at the corners of the honeycomb are one") {
  auto g = gkz_vector(fixtures::honeycomb_facets());
  REQUIRE(g[0] == 1);
  REQUIRE(g[19] == 1);
}

TEST_CASE("link length histogram of the example") {
  REQUIRE(b_vector(fixtures::example_facets()) ==
          std::array<std::size_t, 4>{2, 4, 2, 2});
}

TEST_CASE("gkz transforms along coordinate permutations") {
  const Triangulation& T = fixtures::example_facets();
  auto g = gkz_vector(T);
  Perm4 p = {2, 0, 3, 1};
  auto act = point_action(p);
  auto gp = gkz_vector(apply_perm(p, T));
  for (std::size_t i = 0; i < 20; ++i)
    REQUIRE(gp[static_cast<std::size_t>(act[i])] == g[i]);
}

TEST_CASE("coordinate orbit sizes") {
  REQUIRE(coordinate_orbit(fixtures::example_facets()).size() == 24);
  auto orbit = coordinate_orbit(fixtures::honeycomb_facets());
  REQUIRE(24 % orbit.size() == 0);
}

TEST_CASE("incidence determinants separate the two examples") {
  REQUIRE(altshuler_determinant(fixtures::example_facets()) == 614912);
  REQUIRE(altshuler_determinant(fixtures::honeycomb_facets()) == 0);
  REQUIRE(altshuler_determinant({{0, 1, 2, 3}}) == 4);
}

TEST_CASE("canonical keys are relabelling invariant") {
  const Triangulation& T = fixtures::example_facets();
  std::string key = canonical_key(T);
  REQUIRE(key.size() == 16);
  REQUIRE(key.find_first_not_of("0123456789abcdef") == std::string::npos);
  REQUIRE(canonical_key(T) == key);
  for (Perm4 p : {Perm4{1, 0, 2, 3}, Perm4{3, 2, 1, 0}, Perm4{1, 2, 3, 0}})
    REQUIRE(canonical_key(apply_perm(p, T)) == key);
  REQUIRE(canonical_key(fixtures::honeycomb_facets()) != key);
}
