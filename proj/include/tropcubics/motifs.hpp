#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropcubics/triangulation.hpp"

namespace tropcubics {

// A motif constrains a small simplicial complex with labeled vertices.
// Exit slots are indexed 0..3 for i,j,k,l; an occurrence assigns each
// slot a distinct coordinate facet.
enum class SlotKind { edge, exists_edge };

struct ExitSlot {
  SlotKind kind = SlotKind::edge;
  std::array<int, 2> edge = {-1, -1};  // label pair, for kind edge
  int cell = -1;                       // catalog cell index, for kind exists_edge
};

// Both endpoints of the edge satisfy sum of x_{facet(s)} over the listed
// slots equal to 1.
struct SideCondition {
  std::array<int, 2> edge;
  std::vector<int> slots;
};

struct SymmetryGen {
  std::vector<int> labels;      // label x maps to position via labels[x]
  std::array<int, 4> slots;
};

struct MotifDefinition {
  std::string name;
  int num_labels = 0;
  std::vector<Cell> cells;      // simplices over label indices (A=0, B=1, ...)
  std::array<ExitSlot, 4> exits;
  std::vector<SideCondition> sides;
  std::vector<std::array<int, 2>> distinct;
  bool family = false;
  std::vector<SymmetryGen> symmetry;
  // Extra slot swaps under which occurrences describe the same line;
  // used for deduplication on top of the symmetry group.
  std::vector<std::array<int, 4>> dedup_slot_swaps;
};

struct MotifOccurrence {
  std::string motif;
  std::vector<int> points;      // label order A, B, C, ...
  std::array<int, 4> exits;     // slot order i, j, k, l

  bool operator<(const MotifOccurrence& o) const {
    return std::tie(motif, points, exits) < std::tie(o.motif, o.points, o.exits);
  }
  bool operator==(const MotifOccurrence& o) const {
    return motif == o.motif && points == o.points && exits == o.exits;
  }
};

namespace motifdetail {

inline MotifDefinition make_motif(
    std::string name, int labels, std::vector<Cell> cells, std::array<ExitSlot, 4> exits,
    std::vector<SideCondition> sides, std::vector<std::array<int, 2>> distinct, bool family,
    std::vector<SymmetryGen> symmetry, std::vector<std::array<int, 4>> dedup) {
  MotifDefinition def;
  def.name = std::move(name);
  def.num_labels = labels;
  def.cells = std::move(cells);
  def.exits = exits;
  def.sides = std::move(sides);
  def.distinct = std::move(distinct);
  def.family = family;
  def.symmetry = std::move(symmetry);
  def.dedup_slot_swaps = std::move(dedup);
  return def;
}

inline ExitSlot edge_exit(int a, int b) { return ExitSlot{SlotKind::edge, {a, b}, -1}; }
inline ExitSlot tetra_exit(int cell) { return ExitSlot{SlotKind::exists_edge, {-1, -1}, cell}; }

inline std::array<int, 2> sorted_pair(int a, int b) {
  return a <= b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

// A group element acting on assignments: points and exits are pulled
// back along the label and slot maps.
struct GroupElement {
  std::vector<int> labels;
  std::array<int, 4> slots;

  bool operator<(const GroupElement& o) const {
    return std::tie(labels, slots) < std::tie(o.labels, o.slots);
  }
};

inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  out.labels.resize(g.labels.size());
  for (size_t x = 0; x < g.labels.size(); ++x) out.labels[x] = g.labels[h.labels[x]];
  for (int s = 0; s < 4; ++s) out.slots[s] = g.slots[h.slots[s]];
  return out;
}

inline std::set<GroupElement> generate_group(int num_labels,
                                             const std::vector<GroupElement>& gens) {
  GroupElement id;
  id.labels.resize(num_labels);
  for (int x = 0; x < num_labels; ++x) id.labels[x] = x;
  id.slots = {0, 1, 2, 3};
  std::set<GroupElement> group = {id};
  std::vector<GroupElement> frontier = {id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& gen : gens) {
        GroupElement h = compose(gen, g);
        if (group.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return group;
}

inline void validate_generator(const MotifDefinition& def, const GroupElement& g) {
  auto map_cell = [&](const Cell& c) {
    Cell out;
    for (int x : c) out.push_back(g.labels[x]);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<Cell> cells_before, cells_after;
  for (const auto& c : def.cells) {
    Cell s = c;
    std::sort(s.begin(), s.end());
    cells_before.insert(s);
    cells_after.insert(map_cell(c));
  }
  if (cells_before != cells_after) {
    throw domain_error("motif " + def.name + ": symmetry generator does not preserve cells");
  }
  for (int s = 0; s < 4; ++s) {
    const ExitSlot& src = def.exits[s];
    const ExitSlot& dst = def.exits[g.slots[s]];
    if (src.kind != dst.kind) {
      throw domain_error("motif " + def.name + ": symmetry generator mixes exit kinds");
    }
    if (src.kind == SlotKind::edge) {
      auto mapped = sorted_pair(g.labels[src.edge[0]], g.labels[src.edge[1]]);
      if (mapped != sorted_pair(dst.edge[0], dst.edge[1])) {
        throw domain_error("motif " + def.name + ": symmetry generator breaks an exit edge");
      }
    } else {
      Cell dst_cell = def.cells[dst.cell];
      std::sort(dst_cell.begin(), dst_cell.end());
      if (map_cell(def.cells[src.cell]) != dst_cell) {
        throw domain_error("motif " + def.name + ": symmetry generator breaks a tetra exit");
      }
    }
  }
  auto side_key = [&](const SideCondition& sc, bool mapped) {
    std::array<int, 2> e = mapped ? sorted_pair(g.labels[sc.edge[0]], g.labels[sc.edge[1]])
                                  : sorted_pair(sc.edge[0], sc.edge[1]);
    std::vector<int> slots;
    for (int s : sc.slots) slots.push_back(mapped ? g.slots[s] : s);
    std::sort(slots.begin(), slots.end());
    return std::make_pair(e, slots);
  };
  std::multiset<std::pair<std::array<int, 2>, std::vector<int>>> sides_before, sides_after;
  for (const auto& sc : def.sides) {
    sides_before.insert(side_key(sc, false));
    sides_after.insert(side_key(sc, true));
  }
  if (sides_before != sides_after) {
    throw domain_error("motif " + def.name + ": symmetry generator breaks a side condition");
  }
  std::set<std::array<int, 2>> dist_before, dist_after;
  for (const auto& d : def.distinct) {
    dist_before.insert(sorted_pair(d[0], d[1]));
    dist_after.insert(sorted_pair(g.labels[d[0]], g.labels[d[1]]));
  }
  if (dist_before != dist_after) {
    throw domain_error("motif " + def.name + ": symmetry generator breaks distinctness");
  }
}

inline std::vector<GroupElement> gens_of(const MotifDefinition& def, bool with_dedup) {
  std::vector<GroupElement> gens;
  for (const auto& s : def.symmetry) gens.push_back({s.labels, s.slots});
  if (with_dedup) {
    std::vector<int> id(def.num_labels);
    for (int x = 0; x < def.num_labels; ++x) id[x] = x;
    for (const auto& slots : def.dedup_slot_swaps) gens.push_back({id, slots});
  }
  return gens;
}

}  // namespace motifdetail

// The ten-motif catalog. Symmetry group orders are validated on
// construction, as is the fact that every generator maps the constraint
// set to itself.
inline const std::vector<MotifDefinition>& catalog() {
  using namespace motifdetail;
  static const std::vector<MotifDefinition> defs = [] {
    std::vector<MotifDefinition> out;
    // 3A: labels A..F. Triangles ABD, ACD and tetra CDEF; the line
    // leaves through AB, BD, AC, EF.
    out.push_back(make_motif(
        "3A", 6, {{0, 1, 3}, {0, 2, 3}, {2, 3, 4, 5}},
        {edge_exit(0, 1), edge_exit(1, 3), edge_exit(0, 2), edge_exit(4, 5)},
        {{{0, 3}, {0, 1}}, {{2, 3}, {3}}},
        {{{0, 4}}, {{0, 5}}, {{1, 2}}},
        false,
        {{{0, 1, 2, 3, 5, 4}, {0, 1, 2, 3}}},
        {}));
    // 3B: triangles ABC, DEF around the centered tetra BCDE.
    out.push_back(make_motif(
        "3B", 6, {{0, 1, 2}, {1, 2, 3, 4}, {3, 4, 5}},
        {edge_exit(0, 1), edge_exit(0, 2), edge_exit(3, 5), edge_exit(4, 5)},
        {{{1, 2}, {0, 1}}, {{3, 4}, {2, 3}}},
        {{{0, 3}}, {{0, 4}}, {{1, 5}}, {{2, 5}}, {{0, 5}}},
        false,
        {{{0, 2, 1, 3, 4, 5}, {1, 0, 2, 3}}, {{5, 3, 4, 1, 2, 0}, {2, 3, 0, 1}}},
        {}));
    // 3C: triangle ABC, then tetras BCDE and DEFG in a chain.
    out.push_back(make_motif(
        "3C", 7, {{0, 1, 2}, {1, 2, 3, 4}, {3, 4, 5, 6}},
        {edge_exit(0, 1), edge_exit(0, 2), edge_exit(3, 4), edge_exit(5, 6)},
        {{{1, 2}, {0, 1}}, {{3, 4}, {3}}},
        {{{0, 3}}, {{0, 4}}},
        false,
        {{{0, 2, 1, 3, 4, 5, 6}, {1, 0, 2, 3}},
         {{0, 1, 2, 4, 3, 5, 6}, {0, 1, 2, 3}},
         {{0, 1, 2, 3, 4, 6, 5}, {0, 1, 2, 3}}},
        {}));
    // 3D: tetra ABCD, triangle CDE, split tetra DEFG.
    out.push_back(make_motif(
        "3D", 7, {{0, 1, 2, 3}, {2, 3, 4}, {3, 4, 5, 6}},
        {edge_exit(2, 4), edge_exit(0, 1), edge_exit(3, 4), edge_exit(5, 6)},
        {{{2, 3}, {1}}, {{3, 4}, {3}}},
        {{{4, 0}}, {{4, 1}}},
        false,
        {{{1, 0, 2, 3, 4, 5, 6}, {0, 1, 2, 3}}, {{0, 1, 2, 3, 4, 6, 5}, {0, 1, 2, 3}}},
        {}));
    // 3E: triangle ABC with two sided tetras BCDE, BCFG over the edge BC.
    out.push_back(make_motif(
        "3E", 7, {{0, 1, 2}, {1, 2, 3, 4}, {1, 2, 5, 6}},
        {edge_exit(0, 1), edge_exit(0, 2), edge_exit(3, 4), edge_exit(5, 6)},
        {{{1, 2}, {2}}, {{1, 2}, {3}}},
        {},
        false,
        {{{0, 2, 1, 3, 4, 5, 6}, {1, 0, 2, 3}},
         {{0, 1, 2, 4, 3, 5, 6}, {0, 1, 2, 3}},
         {{0, 2, 1, 5, 6, 3, 4}, {1, 0, 3, 2}}},
        {}));
    // 3F: chain of tetras ABCD, CDEF, EFGH.
    out.push_back(make_motif(
        "3F", 8, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}},
        {edge_exit(2, 3), edge_exit(0, 1), edge_exit(4, 5), edge_exit(6, 7)},
        {{{2, 3}, {1}}, {{4, 5}, {3}}},
        {},
        false,
        {{{1, 0, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3}},
         {{0, 1, 3, 2, 4, 5, 6, 7}, {0, 1, 2, 3}},
         {{0, 1, 2, 3, 5, 4, 6, 7}, {0, 1, 2, 3}},
         {{0, 1, 2, 3, 4, 5, 7, 6}, {0, 1, 2, 3}},
         {{7, 6, 5, 4, 3, 2, 1, 0}, {2, 3, 0, 1}}},
        {}));
    // 3G: tetra ABCD with two free exits, then the sided and split
    // tetra CDEF.
    out.push_back(make_motif(
        "3G", 6, {{0, 1, 2, 3}, {2, 3, 4, 5}},
        {tetra_exit(0), tetra_exit(0), edge_exit(2, 3), edge_exit(4, 5)},
        {{{2, 3}, {3}}},
        {},
        false,
        {{{1, 0, 2, 3, 4, 5}, {0, 1, 2, 3}},
         {{0, 1, 3, 2, 4, 5}, {0, 1, 2, 3}},
         {{0, 1, 2, 3, 5, 4}, {0, 1, 2, 3}}},
        {{1, 0, 2, 3}}));
    // 3H: tetra ABCD with two free exits and a dangling triangle CDE.
    out.push_back(make_motif(
        "3H", 5, {{0, 1, 2, 3}, {2, 3, 4}},
        {tetra_exit(0), tetra_exit(0), edge_exit(2, 4), edge_exit(3, 4)},
        {{{2, 3}, {2, 3}}},
        {{{4, 0}}, {{4, 1}}},
        false,
        {{{1, 0, 2, 3, 4}, {0, 1, 2, 3}}, {{0, 1, 3, 2, 4}, {0, 1, 3, 2}}},
        {{1, 0, 2, 3}}));
    // 3I: a single tetra; the edge CD carries two exits, so the line
    // family slides along the dual two-cell.
    out.push_back(make_motif(
        "3I", 4, {{0, 1, 2, 3}},
        {tetra_exit(0), tetra_exit(0), edge_exit(2, 3), edge_exit(2, 3)},
        {},
        {},
        true,
        {{{1, 0, 2, 3}, {0, 1, 2, 3}}, {{0, 1, 3, 2}, {0, 1, 2, 3}}},
        {{1, 0, 2, 3}, {0, 1, 3, 2}}));
    // 3J: tetras ABCD, ABCE glued along ABC plus the triangle ADE; the
    // edge BC carries two exits and DE the other two.
    out.push_back(make_motif(
        "3J", 5, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 3, 4}},
        {edge_exit(1, 2), edge_exit(1, 2), edge_exit(3, 4), edge_exit(3, 4)},
        {{{0, 3}, {1}}, {{0, 4}, {0}}},
        {},
        true,
        {{{0, 2, 1, 3, 4}, {0, 1, 2, 3}}, {{0, 1, 2, 4, 3}, {1, 0, 2, 3}}},
        {{0, 1, 3, 2}}));

    const std::array<size_t, 10> expected_orders = {2, 8, 8, 4, 16, 32, 8, 4, 4, 4};
    for (size_t m = 0; m < out.size(); ++m) {
      for (const auto& gen : gens_of(out[m], true)) validate_generator(out[m], gen);
      auto group = generate_group(out[m].num_labels, gens_of(out[m], false));
      if (group.size() != expected_orders[m]) {
        throw domain_error("motif " + out[m].name + ": unexpected symmetry group order");
      }
    }
    return out;
  }();
  return defs;
}

inline const MotifDefinition& motif_by_name(const std::string& name) {
  for (const auto& def : catalog()) {
    if (def.name == name) return def;
  }
  throw domain_error("unknown motif " + name);
}

// Features of a triangulation used to seed the occurrence search. Edges
// are stored as sorted point pairs.
struct SidedTetra {
  Cell tet;
  int facet;                        // the shared exit direction
  std::array<int, 2> edge_on_facet; // edge with x_facet = 0
  std::array<int, 2> edge_on_one;   // opposite edge with x_facet = 1
};

struct SplitTetra {
  Cell tet;
  std::array<int, 2> edge1;
  int facet1;
  std::array<int, 2> edge2;
  int facet2;
};

struct CenteredTetra {
  Cell tet;
  std::array<int, 4> vertex_on_facet;  // vertex_on_facet[f] lies on F_f
};

struct DanglingTriangle {
  Cell tri;
  std::array<int, 2> edge1;
  int facet1;
  std::array<int, 2> edge2;
  int facet2;
};

struct FeatureIndex {
  std::vector<SidedTetra> sided;
  std::vector<SplitTetra> split;
  std::vector<CenteredTetra> centered;
  std::vector<DanglingTriangle> dangling;
};

namespace motifdetail {

inline const std::array<std::array<int, 4>, 3> kOppositeSplits = {{
    {{0, 1, 2, 3}}, {{0, 2, 1, 3}}, {{0, 3, 1, 2}},
}};

inline bool edge_on(const std::array<int, 2>& e, int f, int value) {
  return kCubicExponents[e[0]][f] == value && kCubicExponents[e[1]][f] == value;
}

}  // namespace motifdetail

inline FeatureIndex features(const Triangulation& T) {
  using namespace motifdetail;
  FeatureIndex idx;
  for (const auto& tet : T) {
    for (const auto& split : kOppositeSplits) {
      std::array<int, 2> e1 = sorted_pair(tet[split[0]], tet[split[1]]);
      std::array<int, 2> e2 = sorted_pair(tet[split[2]], tet[split[3]]);
      for (int f = 0; f < 4; ++f) {
        if (edge_on(e1, f, 0) && edge_on(e2, f, 1)) idx.sided.push_back({tet, f, e1, e2});
        if (edge_on(e2, f, 0) && edge_on(e1, f, 1)) idx.sided.push_back({tet, f, e2, e1});
      }
      for (int f1 = 0; f1 < 4; ++f1) {
        if (!edge_on(e1, f1, 0)) continue;
        for (int f2 = 0; f2 < 4; ++f2) {
          if (f2 == f1 || !edge_on(e2, f2, 0)) continue;
          if (std::make_pair(e1, f1) < std::make_pair(e2, f2)) {
            idx.split.push_back({tet, e1, f1, e2, f2});
          } else {
            idx.split.push_back({tet, e2, f2, e1, f1});
          }
        }
      }
    }
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (int f = 0; f < 4 && ok; ++f) ok = kCubicExponents[tet[perm[f]]][f] == 0;
      if (ok) {
        CenteredTetra c;
        c.tet = tet;
        for (int f = 0; f < 4; ++f) c.vertex_on_facet[f] = tet[perm[f]];
        idx.centered.push_back(c);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& tri : faces_of_complex(T, 2)) {
    std::array<std::array<int, 2>, 3> edges = {
        sorted_pair(tri[0], tri[1]), sorted_pair(tri[0], tri[2]), sorted_pair(tri[1], tri[2])};
    std::vector<std::pair<std::array<int, 2>, int>> exits;
    for (const auto& e : edges) {
      for (int f = 0; f < 4; ++f) {
        if (edge_on(e, f, 0)) exits.push_back({e, f});
      }
    }
    for (size_t a = 0; a < exits.size(); ++a) {
      for (size_t b = a + 1; b < exits.size(); ++b) {
        if (exits[a].first == exits[b].first || exits[a].second == exits[b].second) continue;
        idx.dangling.push_back(
            {tri, exits[a].first, exits[a].second, exits[b].first, exits[b].second});
      }
    }
  }
  return idx;
}

// Labeled candidate choices anchored on a sided tetra: pick any tetra
// that is sided in some direction, one of its opposite edge pairs with
// roles assigned, and an exit facet containing the exit edge. The side
// condition tying the opposite edge to the same direction is left to
// the per-motif constraint check, so this overcounts the strict
// instances. Each choice carries one ordering factor of two.
inline size_t sided_labeling_count(const FeatureIndex& idx) {
  using namespace motifdetail;
  std::set<Cell> tets;
  for (const auto& st : idx.sided) {
    Cell key = st.tet;
    std::sort(key.begin(), key.end());
    tets.insert(key);
  }
  size_t count = 0;
  for (const auto& tet : tets) {
    for (const auto& split : kOppositeSplits) {
      std::array<int, 2> e1 = {tet[split[0]], tet[split[1]]};
      std::array<int, 2> e2 = {tet[split[2]], tet[split[3]]};
      for (int f = 0; f < 4; ++f) {
        if (edge_on(e1, f, 0)) ++count;
        if (edge_on(e2, f, 0)) ++count;
      }
    }
  }
  return 2 * count;
}

namespace motifdetail {

struct FaceMasks {
  std::vector<uint32_t> by_dim[4];
};

inline FaceMasks face_masks(const Triangulation& T) {
  FaceMasks fm;
  for (int dim = 2; dim <= 3; ++dim) {
    for (const auto& face : faces_of_complex(T, dim)) {
      uint32_t mask = 0;
      for (int p : face) mask |= 1u << p;
      fm.by_dim[dim].push_back(mask);
    }
  }
  return fm;
}

inline bool extends_to_face(const FaceMasks& fm, int dim, uint32_t need) {
  for (uint32_t mask : fm.by_dim[dim]) {
    if ((need & ~mask) == 0) return true;
  }
  return false;
}

struct SearchContext {
  const Triangulation* T;
  const MotifDefinition* def;
  FaceMasks masks;
  std::set<MotifOccurrence>* out;
  std::vector<std::set<GroupElement>> const* groups;
  size_t motif_index;
};

inline bool cell_image_ok(const SearchContext& ctx, const Cell& cell,
                          const std::vector<int>& points, int just_bound) {
  bool involved = false;
  uint32_t mask = 0;
  int bound = 0;
  std::set<int> distinct;
  for (int x : cell) {
    if (x == just_bound) involved = true;
    if (points[x] < 0) continue;
    ++bound;
    mask |= 1u << points[x];
    distinct.insert(points[x]);
  }
  if (!involved) return true;
  if (static_cast<size_t>(bound) != distinct.size()) return false;
  return extends_to_face(ctx.masks, static_cast<int>(cell.size()) - 1, mask);
}

inline bool exits_ok(const MotifDefinition& def, const std::vector<int>& points,
                     const std::array<int, 4>& exits) {
  for (int s = 0; s < 4; ++s) {
    const ExitSlot& slot = def.exits[s];
    int f = exits[s];
    if (slot.kind == SlotKind::edge) {
      if (kCubicExponents[points[slot.edge[0]]][f] != 0) return false;
      if (kCubicExponents[points[slot.edge[1]]][f] != 0) return false;
    } else {
      const Cell& cell = def.cells[slot.cell];
      bool found = false;
      for (size_t a = 0; a < cell.size() && !found; ++a) {
        for (size_t b = a + 1; b < cell.size() && !found; ++b) {
          int p = points[cell[a]], q = points[cell[b]];
          if (p != q && kCubicExponents[p][f] == 0 && kCubicExponents[q][f] == 0) found = true;
        }
      }
      if (!found) return false;
    }
  }
  for (const auto& side : def.sides) {
    for (int end = 0; end < 2; ++end) {
      int p = points[side.edge[end]];
      int sum = 0;
      for (int s : side.slots) sum += kCubicExponents[p][exits[s]];
      if (sum != 1) return false;
    }
  }
  return true;
}

inline MotifOccurrence canonical_occurrence(const SearchContext& ctx,
                                            const MotifOccurrence& occ) {
  const auto& group = (*ctx.groups)[ctx.motif_index];
  MotifOccurrence best = occ;
  MotifOccurrence cur = occ;
  for (const auto& g : group) {
    for (size_t x = 0; x < occ.points.size(); ++x) cur.points[x] = occ.points[g.labels[x]];
    for (int s = 0; s < 4; ++s) cur.exits[s] = occ.exits[g.slots[s]];
    if (std::tie(cur.points, cur.exits) < std::tie(best.points, best.exits)) best = cur;
  }
  return best;
}

inline void try_exits(const SearchContext& ctx, const std::vector<int>& points,
                      const std::array<int, 4>& pinned) {
  std::array<int, 4> facets = {0, 1, 2, 3};
  do {
    bool ok = true;
    for (int s = 0; s < 4 && ok; ++s) {
      if (pinned[s] >= 0 && facets[s] != pinned[s]) ok = false;
    }
    if (!ok || !exits_ok(*ctx.def, points, facets)) continue;
    MotifOccurrence occ{ctx.def->name, points, facets};
    ctx.out->insert(canonical_occurrence(ctx, occ));
  } while (std::next_permutation(facets.begin(), facets.end()));
}

inline void extend_labels(const SearchContext& ctx, std::vector<int>& points,
                          const std::array<int, 4>& pinned) {
  int next = -1;
  for (int x = 0; x < ctx.def->num_labels; ++x) {
    if (points[x] < 0) {
      next = x;
      break;
    }
  }
  if (next < 0) {
    for (const auto& cell : ctx.def->cells) {
      if (!cell_image_ok(ctx, cell, points, cell[0])) return;
    }
    for (const auto& d : ctx.def->distinct) {
      if (points[d[0]] == points[d[1]]) return;
    }
    // Distinct cells of equal dimension must land on distinct cells of
    // the triangulation; a fold-back collapses the dual vertices.
    for (size_t a = 0; a < ctx.def->cells.size(); ++a) {
      for (size_t b = a + 1; b < ctx.def->cells.size(); ++b) {
        if (ctx.def->cells[a].size() != ctx.def->cells[b].size()) continue;
        std::set<int> ia, ib;
        for (int x : ctx.def->cells[a]) ia.insert(points[x]);
        for (int x : ctx.def->cells[b]) ib.insert(points[x]);
        if (ia == ib) return;
      }
    }
    try_exits(ctx, points, pinned);
    return;
  }
  for (int p = 0; p < kNumPoints; ++p) {
    points[next] = p;
    bool ok = true;
    for (const auto& cell : ctx.def->cells) {
      if (!cell_image_ok(ctx, cell, points, next)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& d : ctx.def->distinct) {
        if (points[d[0]] >= 0 && points[d[1]] >= 0 && points[d[0]] == points[d[1]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) extend_labels(ctx, points, pinned);
    points[next] = -1;
  }
}

// Anchored starts: each motif names one feature whose instances bind an
// initial set of labels (and pin the slots those labels determine). The
// generic backtracking completes the remaining labels.
struct Anchor {
  std::vector<int> labels;
  std::vector<int> values;
  std::array<int, 4> pinned = {-1, -1, -1, -1};
};

inline void anchors_for(const MotifDefinition& def, const FeatureIndex& idx,
                        std::vector<Anchor>& out) {
  auto pair_orders = [](const std::array<int, 2>& e) {
    return std::array<std::array<int, 2>, 2>{{{e[0], e[1]}, {e[1], e[0]}}};
  };
  if (def.name == "3A" || def.name == "3C" || def.name == "3E" || def.name == "3J") {
    // Sided anchors: labels (one on each end of the two opposite
    // edges), slot of the shared exit pinned.
    std::vector<int> labels;
    int slot = 0;
    if (def.name == "3A") labels = {2, 3, 4, 5}, slot = 3;   // C,D on x=1; E,F exit l
    if (def.name == "3C") labels = {3, 4, 5, 6}, slot = 3;   // D,E side; F,G exit l
    if (def.name == "3E") labels = {1, 2, 3, 4}, slot = 2;   // B,C side; D,E exit k
    if (def.name == "3J") labels = {0, 3, 1, 2}, slot = 1;   // A,D side; B,C exit j
    for (const auto& st : idx.sided) {
      for (const auto& one : pair_orders(st.edge_on_one)) {
        for (const auto& zero : pair_orders(st.edge_on_facet)) {
          Anchor a;
          a.labels = labels;
          a.values = {one[0], one[1], zero[0], zero[1]};
          a.pinned[slot] = st.facet;
          out.push_back(a);
        }
      }
    }
  } else if (def.name == "3B") {
    // Centered anchor: B,C,D,E take the vertices matched to the four
    // exit facets, which pins all slots.
    for (const auto& ct : idx.centered) {
      std::array<int, 4> facets = {0, 1, 2, 3};
      std::sort(facets.begin(), facets.end());
      do {
        Anchor a;
        a.labels = {1, 2, 3, 4};
        a.values = {ct.vertex_on_facet[facets[0]], ct.vertex_on_facet[facets[1]],
                    ct.vertex_on_facet[facets[2]], ct.vertex_on_facet[facets[3]]};
        a.pinned = facets;
        out.push_back(a);
      } while (std::next_permutation(facets.begin(), facets.end()));
    }
  } else if (def.name == "3D" || def.name == "3F" || def.name == "3G") {
    // Split anchors: the two exit edges of the split tetra with their
    // slots pinned, in both role assignments.
    std::vector<int> labels;
    int slot1 = 0, slot2 = 0;
    if (def.name == "3D") labels = {3, 4, 5, 6}, slot1 = 2, slot2 = 3;  // DE, FG
    if (def.name == "3F") labels = {2, 3, 4, 5}, slot1 = 0, slot2 = 2;  // CD, EF
    if (def.name == "3G") labels = {2, 3, 4, 5}, slot1 = 2, slot2 = 3;  // CD, EF
    for (const auto& sp : idx.split) {
      for (int role = 0; role < 2; ++role) {
        auto ea = role == 0 ? sp.edge1 : sp.edge2;
        auto eb = role == 0 ? sp.edge2 : sp.edge1;
        int fa = role == 0 ? sp.facet1 : sp.facet2;
        int fb = role == 0 ? sp.facet2 : sp.facet1;
        for (const auto& first : pair_orders(ea)) {
          for (const auto& second : pair_orders(eb)) {
            Anchor a;
            a.labels = labels;
            a.values = {first[0], first[1], second[0], second[1]};
            a.pinned[slot1] = fa;
            a.pinned[slot2] = fb;
            out.push_back(a);
          }
        }
      }
    }
  } else if (def.name == "3H") {
    // Dangling anchor: C,E and D,E are the two exit edges of the
    // triangle CDE.
    for (const auto& dt : idx.dangling) {
      for (int role = 0; role < 2; ++role) {
        auto ce = role == 0 ? dt.edge1 : dt.edge2;
        auto de = role == 0 ? dt.edge2 : dt.edge1;
        int fk = role == 0 ? dt.facet1 : dt.facet2;
        int fl = role == 0 ? dt.facet2 : dt.facet1;
        int e1 = -1;
        for (int u : ce) {
          for (int v : de) {
            if (u == v) e1 = u;
          }
        }
        if (e1 < 0) continue;
        int c = ce[0] == e1 ? ce[1] : ce[0];
        int d = de[0] == e1 ? de[1] : de[0];
        Anchor a;
        a.labels = {2, 3, 4};
        a.values = {c, d, e1};
        a.pinned[2] = fk;
        a.pinned[3] = fl;
        out.push_back(a);
      }
    }
  } else {
    // 3I: the single tetra is its own anchor; enumerate directly.
    out.push_back(Anchor{});
  }
}

}  // namespace motifdetail

namespace motifdetail {

inline const std::vector<std::set<GroupElement>>& dedup_groups() {
  static const std::vector<std::set<GroupElement>> groups = [] {
    std::vector<std::set<GroupElement>> gs;
    for (const auto& def : catalog()) {
      gs.push_back(generate_group(def.num_labels, gens_of(def, true)));
    }
    return gs;
  }();
  return groups;
}

}  // namespace motifdetail

// All motif occurrences in T, one canonical representative per symmetry
// class. The search is seeded from the feature index and completed by
// backtracking over the remaining labels.
inline std::vector<MotifOccurrence> occurrences(const Triangulation& T) {
  using namespace motifdetail;
  const auto& defs = catalog();
  FeatureIndex idx = features(T);
  FaceMasks masks = face_masks(T);
  std::set<MotifOccurrence> out;
  for (size_t m = 0; m < defs.size(); ++m) {
    SearchContext ctx{&T, &defs[m], masks, &out, &dedup_groups(), m};
    std::vector<Anchor> anchors;
    anchors_for(defs[m], idx, anchors);
    for (const auto& anchor : anchors) {
      std::vector<int> points(defs[m].num_labels, -1);
      bool ok = true;
      for (size_t a = 0; a < anchor.labels.size() && ok; ++a) {
        points[anchor.labels[a]] = anchor.values[a];
        for (const auto& cell : defs[m].cells) {
          if (!cell_image_ok(ctx, cell, points, anchor.labels[a])) ok = false;
        }
      }
      if (ok) extend_labels(ctx, points, anchor.pinned);
    }
  }
  return {out.begin(), out.end()};
}

// Label-by-label enumeration of a single motif, used as an oracle for
// the anchored search.
inline std::vector<MotifOccurrence> occurrences_naive(const Triangulation& T,
                                                      const std::string& name) {
  using namespace motifdetail;
  const auto& defs = catalog();
  size_t m = 0;
  while (m < defs.size() && defs[m].name != name) ++m;
  if (m == defs.size()) throw domain_error("unknown motif " + name);
  std::set<MotifOccurrence> out;
  SearchContext ctx{&T, &defs[m], face_masks(T), &out, &dedup_groups(), m};
  std::vector<int> points(defs[m].num_labels, -1);
  extend_labels(ctx, points, {-1, -1, -1, -1});
  return {out.begin(), out.end()};
}

inline std::map<std::string, size_t> occurrence_counts(
    const std::vector<MotifOccurrence>& occs) {
  std::map<std::string, size_t> counts;
  for (const auto& def : catalog()) counts[def.name] = 0;
  for (const auto& occ : occs) ++counts[occ.motif];
  return counts;
}

// Lex-min representative of an occurrence under its motif's symmetry
// and slot-swap group, the same normal form the search emits.
inline MotifOccurrence canonicalize_occurrence(const MotifOccurrence& occ) {
  const auto& defs = catalog();
  size_t m = 0;
  while (m < defs.size() && defs[m].name != occ.motif) ++m;
  if (m == defs.size()) throw domain_error("unknown motif " + occ.motif);
  if (occ.points.size() != static_cast<size_t>(defs[m].num_labels)) {
    throw domain_error("wrong label count for motif " + occ.motif);
  }
  MotifOccurrence best = occ;
  MotifOccurrence cur = occ;
  for (const auto& g : motifdetail::dedup_groups()[m]) {
    for (size_t x = 0; x < occ.points.size(); ++x) cur.points[x] = occ.points[g.labels[x]];
    for (int s = 0; s < 4; ++s) cur.exits[s] = occ.exits[g.slots[s]];
    if (std::tie(cur.points, cur.exits) < std::tie(best.points, best.exits)) best = cur;
  }
  return best;
}

// Coordinate permutations act on occurrences through the point action
// on labels and the facet relabeling on exits.
inline MotifOccurrence apply_perm(const Perm4& p, const MotifOccurrence& occ) {
  MotifOccurrence out = occ;
  auto action = point_action(p);
  for (auto& pt : out.points) pt = action[pt];
  for (auto& f : out.exits) f = p[f];
  return out;
}

}  // namespace tropcubics
