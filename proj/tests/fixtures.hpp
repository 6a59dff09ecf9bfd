#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropcubics/motifs.hpp"
#include "tropcubics/triangulation.hpp"

// Frozen reference data for the two worked examples used across the
// test suite: a generic unimodular triangulation ("example") and the
// honeycomb triangulation, together with height vectors inducing them
// and the expected invariants and occurrence lists.
namespace fixtures {

using tropcubics::IVec;
using tropcubics::QVec;
using tropcubics::Rat;
using tropcubics::Triangulation;

inline QVec qvec(const std::vector<long long>& v) {
  QVec out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline IVec ivec(const std::vector<long long>& v) {
  IVec out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline const QVec& example_heights() {
  static const QVec C = qvec(
      {44, 0, 1, 15, 19, 0, 9, 2, 4, 0, 38, 0, 15, 16, 4, 1, 33, 16, 14, 29});
  return C;
}

inline const Triangulation& example_facets() {
  static const Triangulation T = {
      {0, 1, 4, 10},   {1, 2, 5, 11},   {1, 4, 7, 13},   {1, 4, 10, 16},
      {1, 4, 13, 19},  {1, 4, 16, 19},  {1, 5, 9, 11},   {1, 7, 9, 15},
      {1, 7, 13, 18},  {1, 7, 15, 18},  {1, 9, 11, 15},  {1, 11, 15, 18},
      {1, 11, 18, 19}, {1, 13, 18, 19}, {2, 3, 6, 14},   {2, 3, 11, 14},
      {2, 5, 9, 11},   {2, 6, 8, 14},   {2, 8, 9, 14},   {2, 9, 11, 15},
      {2, 9, 14, 15},  {2, 11, 14, 15}, {3, 11, 12, 14}, {11, 12, 14, 17},
      {11, 14, 15, 17}, {11, 15, 17, 18}, {11, 17, 18, 19}};
  return T;
}

inline const QVec& honeycomb_heights() {
  static const QVec C = qvec(
      {32, 17, 20, 41, 26, 17, 32, 33, 36, 54, 8, 1, 14, 4, 7, 18, 0, 0, 0, 0});
  return C;
}

inline const Triangulation& honeycomb_facets() {
  static const Triangulation T = {
      {0, 1, 4, 10},   {1, 2, 5, 11},   {1, 4, 5, 13},   {1, 4, 10, 13},
      {1, 5, 11, 13},  {1, 10, 11, 13}, {2, 3, 6, 12},   {2, 5, 6, 14},
      {2, 5, 11, 14},  {2, 6, 12, 14},  {2, 11, 12, 14}, {4, 5, 7, 13},
      {5, 6, 8, 14},   {5, 7, 8, 15},   {5, 7, 13, 15},  {5, 8, 14, 15},
      {5, 11, 13, 14}, {5, 13, 14, 15}, {7, 8, 9, 15},   {10, 11, 13, 16},
      {11, 12, 14, 17}, {11, 13, 14, 18}, {11, 13, 16, 18}, {11, 14, 17, 18},
      {11, 16, 17, 18}, {13, 14, 15, 18}, {16, 17, 18, 19}};
  return T;
}

inline const std::array<long long, 20>& example_gkz() {
  static const std::array<long long, 20> g = {1, 14, 9, 3, 5, 3, 2, 4, 2, 7,
                                              2, 14, 2, 4, 9, 9, 2, 4, 7, 5};
  return g;
}

struct LinkRow {
  std::array<int, 2> edge;
  std::vector<int> cycle;
};

inline const std::vector<LinkRow>& example_links() {
  static const std::vector<LinkRow> rows = {
      {{1, 13}, {4, 7, 18, 19}},
      {{1, 15}, {7, 9, 11, 18}},
      {{1, 18}, {7, 13, 19, 11, 15}},
      {{2, 14}, {3, 6, 8, 9, 15, 11}},
      {{2, 15}, {9, 11, 14}},
      {{5, 11}, {1, 2, 9}},
      {{9, 11}, {1, 5, 2, 15}},
      {{11, 14}, {2, 3, 12, 17, 15}},
      {{11, 15}, {1, 9, 2, 14, 17, 18}},
      {{11, 18}, {1, 15, 17, 19}}};
  return rows;
}

// Expected per-motif occurrence counts for the example, in catalog
// order 3A..3J.
inline const std::array<std::size_t, 10>& example_motif_counts() {
  static const std::array<std::size_t, 10> counts = {6, 5, 0, 24, 0, 2, 4, 7, 2, 1};
  return counts;
}

struct OccRow {
  const char* motif;
  std::vector<int> points;
  std::array<int, 4> exits;
};

inline tropcubics::MotifOccurrence occ_of(const OccRow& row) {
  tropcubics::MotifOccurrence occ;
  occ.motif = row.motif;
  occ.points = row.points;
  occ.exits = row.exits;
  return occ;
}

// The 24 globally visible occurrences of the example, the reference lists.
inline const std::vector<OccRow>& global_rows() {
  static const std::vector<OccRow> rows = {
      {"3B", {9, 15, 7, 1, 18, 19}, {0, 1, 2, 3}},
      {"3D", {9, 15, 2, 11, 1, 9, 15}, {1, 0, 2, 3}},
      {"3D", {3, 14, 2, 11, 1, 15, 18}, {1, 0, 2, 3}},
      {"3D", {9, 15, 2, 11, 1, 15, 18}, {1, 0, 2, 3}},
      {"3D", {14, 15, 2, 11, 1, 15, 18}, {1, 0, 2, 3}},
      {"3D", {3, 14, 2, 11, 1, 18, 19}, {1, 0, 2, 3}},
      {"3D", {9, 15, 2, 11, 1, 18, 19}, {1, 0, 2, 3}},
      {"3D", {14, 15, 2, 11, 1, 18, 19}, {1, 0, 2, 3}},
      {"3D", {9, 15, 1, 11, 2, 3, 14}, {1, 3, 2, 0}},
      {"3D", {9, 15, 1, 11, 2, 14, 15}, {1, 3, 2, 0}},
      {"3D", {9, 15, 1, 11, 2, 9, 15}, {1, 3, 2, 0}},
      {"3D", {2, 3, 14, 11, 17, 15, 18}, {0, 1, 2, 3}},
      {"3D", {2, 3, 14, 11, 17, 18, 19}, {0, 1, 2, 3}},
      {"3F", {15, 18, 11, 17, 14, 15, 2, 9}, {2, 3, 0, 1}},
      {"3F", {18, 19, 11, 17, 14, 15, 2, 9}, {2, 3, 0, 1}},
      {"3G", {9, 15, 2, 11, 3, 14}, {1, 3, 2, 0}},
      {"3G", {9, 15, 2, 11, 14, 15}, {1, 3, 2, 0}},
      {"3G", {9, 15, 1, 11, 15, 18}, {0, 1, 2, 3}},
      {"3G", {9, 15, 1, 11, 18, 19}, {0, 1, 2, 3}},
      {"3H", {7, 15, 1, 18, 19}, {0, 1, 2, 3}},
      {"3H", {9, 15, 2, 14, 3}, {1, 3, 2, 0}},
      {"3I", {1, 11, 9, 15}, {1, 2, 0, 3}},
      {"3I", {2, 11, 9, 15}, {1, 2, 0, 3}},
      {"3J", {11, 9, 15, 1, 2}, {0, 3, 1, 2}}};
  return rows;
}

struct PartialRow {
  OccRow occ;
  std::vector<std::vector<long long>> walls;  // coefficient vectors over c0..c19
};

// The 18 partially visible occurrences of the example, with their wall
// forms (compared up to sign and positive scaling).
inline const std::vector<PartialRow>& partial_rows() {
  static const std::vector<PartialRow> rows = {
      {{"3A", {18, 17, 15, 11, 2, 9}, {0, 2, 3, 1}},
       {{0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, 1, -1, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 2, 0, -1, -1, 1}}},
      {{"3A", {18, 19, 15, 11, 2, 9}, {3, 2, 0, 1}},
       {{0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, 1, -1, 0}}},
      {{"3A", {18, 19, 15, 11, 2, 9}, {0, 2, 3, 1}},
       {{0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -2, 0, 1, 1, -1}}},
      {{"3A", {18, 17, 15, 11, 1, 9}, {0, 2, 3, 1}},
       {{0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 0, 2, 0, 1, -1, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, -1, 0, -1, -1, 1}}},
      {{"3A", {18, 19, 15, 11, 1, 9}, {3, 2, 0, 1}},
       {{0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 0, 2, 0, 1, -1, 0}}},
      {{"3A", {18, 19, 15, 11, 1, 9}, {0, 2, 3, 1}},
       {{0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 0, 1, 0, 1, 1, -1}}},
      {{"3B", {17, 18, 11, 1, 15, 7}, {0, 2, 1, 3}},
       {{0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 1, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, -1, -2, 1}}},
      {{"3B", {17, 18, 11, 1, 15, 9}, {0, 2, 1, 3}},
       {{0, -1, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, -1, -2, 1}}},
      {{"3B", {19, 18, 11, 1, 15, 7}, {0, 2, 1, 3}},
       {{0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, -1, 0, 1, 2, -1}}},
      {{"3B", {19, 18, 11, 1, 15, 9}, {0, 2, 1, 3}},
       {{0, -1, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, -1, 0, 1, 2, -1}}},
      {{"3D", {1, 9, 15, 11, 17, 15, 18}, {0, 1, 2, 3}},
       {{0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, -2, 0, -1, 1, 0}}},
      {{"3D", {2, 9, 15, 11, 17, 15, 18}, {0, 1, 2, 3}},
       {{0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, -1, 1, 0}}},
      {{"3D", {1, 9, 15, 11, 17, 18, 19}, {0, 1, 2, 3}},
       {{0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, -2, 0, -1, 1, 0}}},
      {{"3D", {2, 9, 15, 11, 17, 18, 19}, {0, 1, 2, 3}},
       {{0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, -1, 1, 0}}},
      {{"3H", {18, 19, 1, 13, 4}, {0, 2, 1, 3}},
       {{0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -2, 1}}},
      {{"3H", {11, 18, 1, 15, 9}, {0, 2, 1, 3}},
       {{0, -1, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0}}},
      {{"3H", {18, 19, 1, 13, 7}, {0, 2, 1, 3}},
       {{0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 2, -1}}},
      {{"3H", {11, 18, 1, 15, 7}, {0, 2, 1, 3}},
       {{0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 1, 0}}}};
  return rows;
}

struct HardlyRow {
  OccRow occ;
  std::vector<long long> equation;  // empty when not pinned
};

// The 9 hardly visible occurrences of the example; the last one's
// equation is pinned by the reference data.
inline const std::vector<HardlyRow>& hardly_rows() {
  static const std::vector<HardlyRow> rows = {
      {{"3D", {3, 14, 2, 11, 1, 9, 15}, {1, 0, 2, 3}}, {}},
      {{"3D", {14, 15, 2, 11, 1, 9, 15}, {1, 0, 2, 3}}, {}},
      {{"3D", {15, 18, 1, 11, 2, 3, 14}, {1, 3, 2, 0}}, {}},
      {{"3D", {18, 19, 1, 11, 2, 3, 14}, {1, 3, 2, 0}}, {}},
      {{"3D", {15, 18, 1, 11, 2, 9, 15}, {1, 3, 2, 0}}, {}},
      {{"3D", {18, 19, 1, 11, 2, 9, 15}, {1, 3, 2, 0}}, {}},
      {{"3D", {15, 18, 1, 11, 2, 14, 15}, {1, 3, 2, 0}}, {}},
      {{"3D", {18, 19, 1, 11, 2, 14, 15}, {1, 3, 2, 0}}, {}},
      {{"3H", {9, 11, 1, 15, 7}, {0, 2, 1, 3}},
       {0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0}}};
  return rows;
}

// The seven wall forms of the example's arrangement, in a fixed
// reference order; all are already primitive with positive leading
// coefficient.
inline const std::vector<std::vector<long long>>& wall_forms() {
  static const std::vector<std::vector<long long>> walls = {
      {0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, -1, 1, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 2, 0, -1, -1, 1},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 0, 2, 0, 1, -1, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -2, 0, 0, 0, 1, 0, 1, 1, -1},
      {0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 1, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, -1, 0, 1, 2, -1},
      {0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 2, -1}};
  return walls;
}

// The two 3D occurrences supported on the honeycomb's central complex.
inline const std::vector<OccRow>& honeycomb_3d_rows() {
  static const std::vector<OccRow> rows = {
      {"3D", {11, 17, 18, 14, 15, 5, 8}, {3, 2, 0, 1}},
      {"3D", {5, 8, 15, 14, 18, 11, 17}, {3, 1, 0, 2}}};
  return rows;
}

// A 3F occurrence of the example whose first and sixth labels land on
// the same point (the map is not injective).
inline const OccRow& noninjective_3f_row() {
  static const OccRow row = {"3F", {15, 18, 11, 17, 14, 15, 2, 9}, {2, 3, 0, 1}};
  return row;
}

}  // namespace fixtures
