#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "tropcubics/motifs.hpp"

#include "fixtures.hpp"

using namespace tropcubics;

namespace {

const std::vector<MotifOccurrence>& example_occurrences() {
  static const std::vector<MotifOccurrence> occs =
      occurrences(fixtures::example_facets());
  return occs;
}

std::set<MotifOccurrence> reference_occurrences() {
  std::set<MotifOccurrence> out;
  for (const auto& row : fixtures::global_rows())
    out.insert(canonicalize_occurrence(fixtures::occ_of(row)));
  for (const auto& row : fixtures::partial_rows())
    out.insert(canonicalize_occurrence(fixtures::occ_of(row.occ)));
  for (const auto& row : fixtures::hardly_rows())
    out.insert(canonicalize_occurrence(fixtures::occ_of(row.occ)));
  return out;
}

} // namespace

TEST_CASE("catalog lists ten motifs with the expected symmetry orders") {
  const auto& defs = catalog();
  REQUIRE(defs.size() == 10);
  const char* names[10] = {"3A", "3B", "3C", "3D", "3E",
                           "3F", "3G", "3H", "3I", "3J"};
  const std::size_t orders[10] = {2, 8, 8, 4, 16, 32, 8, 4, 4, 4};
  for (std::size_t m = 0; m < 10; ++m) {
    REQUIRE(defs[m].name == names[m]);
    auto group = motifdetail::generate_group(
        defs[m].num_labels, motifdetail::gens_of(defs[m], false));
    REQUIRE(group.size() == orders[m]);
  }
}

TEST_CASE("feature index of the example") {
  auto idx = features(fixtures::example_facets());
  REQUIRE(sided_labeling_count(idx) == 114);
}

TEST_CASE("per-motif counts on the example") {
  auto counts = occurrence_counts(example_occurrences());
  const auto& defs = catalog();
  std::size_t total = 0;
  for (std::size_t m = 0; m < 10; ++m) {
    REQUIRE(counts.at(defs[m].name) == fixtures::example_motif_counts()[m]);
    total += counts.at(defs[m].name);
  }
  REQUIRE(total == 51);
  REQUIRE(example_occurrences().size() == 51);
}

TEST_CASE("the example occurrence list matches the reference tables") {
  std::set<MotifOccurrence> found(example_occurrences().begin(),
                                  example_occurrences().end());
  REQUIRE(found == reference_occurrences());
}

TEST_CASE("search output is canonical and symmetry-closed") {
  for (const auto& occ : example_occurrences()) {
    REQUIRE(canonicalize_occurrence(occ) == occ);
  }
}

TEST_CASE("no 3A occurrence repeats its first label at the far tetra") {
  for (const Triangulation& T :
       {fixtures::example_facets(), fixtures::honeycomb_facets()}) {
    for (const auto& occ : occurrences(T)) {
      if (occ.motif != "3A") continue;
      REQUIRE(occ.points[0] != occ.points[4]);
      REQUIRE(occ.points[0] != occ.points[5]);
    }
  }
}

TEST_CASE("honeycomb contains the two central 3D occurrences") {
  auto occs = occurrences(fixtures::honeycomb_facets());
  std::set<MotifOccurrence> found(occs.begin(), occs.end());
  for (const auto& row : fixtures::honeycomb_3d_rows()) {
    REQUIRE(found.count(canonicalize_occurrence(fixtures::occ_of(row))) == 1);
  }
  std::size_t total = occs.size();
  REQUIRE(total >= 27);
  REQUIRE(total <= 128);
}

TEST_CASE("a 3F occurrence may repeat a point") {
  MotifOccurrence occ =
      canonicalize_occurrence(fixtures::occ_of(fixtures::noninjective_3f_row()));
  std::set<MotifOccurrence> found(example_occurrences().begin(),
                                  example_occurrences().end());
  REQUIRE(found.count(occ) == 1);
  std::multiset<int> labels(occ.points.begin(), occ.points.end());
  std::set<int> distinct(occ.points.begin(), occ.points.end());
  REQUIRE(labels.size() > distinct.size());
}

TEST_CASE("label-by-label enumeration agrees with the anchored search") {
  const Triangulation& T = fixtures::example_facets();
  for (const char* name : {"3H", "3I", "3J", "3C"}) {
    auto naive = occurrences_naive(T, name);
    std::vector<MotifOccurrence> fast;
    for (const auto& occ : example_occurrences())
      if (occ.motif == name) fast.push_back(occ);
    REQUIRE(naive == fast);
  }
  auto naive3d = occurrences_naive(fixtures::honeycomb_facets(), "3D");
  std::vector<MotifOccurrence> fast3d;
  for (const auto& occ : occurrences(fixtures::honeycomb_facets()))
    if (occ.motif == "3D") fast3d.push_back(occ);
  REQUIRE(naive3d == fast3d);
}

TEST_CASE("occurrences transform along coordinate permutations") {
  const Triangulation& T = fixtures::example_facets();
  Perm4 p = {1, 3, 0, 2};
  std::set<MotifOccurrence> image;
  for (const auto& occ : example_occurrences())
    image.insert(canonicalize_occurrence(apply_perm(p, occ)));
  auto permuted = occurrences(apply_perm(p, T));
  std::set<MotifOccurrence> direct(permuted.begin(), permuted.end());
  REQUIRE(image == direct);
}
