#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropcubics/incidence.hpp"
#include "tropcubics/linalg.hpp"
#include "tropcubics/motifs.hpp"
#include "tropcubics/surface.hpp"

namespace tropcubics {

enum class Visibility { global, partial, hardly };

inline std::string to_string(Visibility v) {
  switch (v) {
    case Visibility::global: return "global";
    case Visibility::partial: return "partial";
    default: return "hardly";
  }
}

// The set of heights for which the occurrence's line lies on the
// surface, described inside the secondary cone of T.
struct VisibilityCone {
  Cone cone;                    // over the 20 height coordinates
  Visibility classification = Visibility::global;
  std::vector<IVec> walls;      // facet inequalities beyond the secondary cone
  std::vector<IVec> equations;  // nonempty exactly for hardly visible occurrences
};

namespace schlaeflidetail {

// The symbolic certificate for one motif: auxiliary variables are the
// three free coordinates of the first line vertex plus nonnegative step
// lengths, and each anchor point on the line prescribes the block of
// monomial forms that are minimal there. Directions are resolved
// through the occurrence's exit slots; slot_b < 0 means a single ray
// direction, otherwise the bounded-edge direction f_a + f_b.
struct AnchorOffset {
  int scalar;
  int slot_a;
  int slot_b;
};

struct AnchorPoint {
  std::vector<AnchorOffset> offsets;
  std::vector<int> block;  // label indices
};

struct AnchorProgram {
  int num_scalars = 0;
  int family_scalar = -1;
  std::vector<AnchorPoint> anchors;
  int v2_anchor = 0;  // anchor index of the second line vertex
};

inline const AnchorProgram& anchor_program(const std::string& motif) {
  static const std::map<std::string, AnchorProgram> programs = [] {
    std::map<std::string, AnchorProgram> p;
    p["3A"] = {2, -1, {{{}, {0, 1, 3}},
                       {{{0, 2, 3}}, {0, 2, 3}},
                       {{{0, 2, 3}, {1, 3, -1}}, {2, 3, 4, 5}}},
               1};
    p["3B"] = {2, -1, {{{}, {0, 1, 2}},
                       {{{0, 2, 3}}, {1, 2, 3, 4}},
                       {{{0, 2, 3}, {1, 2, 3}}, {3, 4, 5}}},
               2};
    p["3C"] = {3, -1, {{{}, {0, 1, 2}},
                       {{{0, 2, 3}}, {1, 2, 3, 4}},
                       {{{0, 2, 3}, {1, 2, 3}}, {3, 4}},
                       {{{0, 2, 3}, {1, 2, 3}, {2, 3, -1}}, {3, 4, 5, 6}}},
               2};
    p["3D"] = {3, -1, {{{}, {2, 3, 4}},
                       {{{0, 1, -1}}, {0, 1, 2, 3}},
                       {{{1, 2, 3}}, {3, 4}},
                       {{{1, 2, 3}, {2, 3, -1}}, {3, 4, 5, 6}}},
               2};
    p["3E"] = {3, -1, {{{}, {0, 1, 2}},
                       {{{0, 2, 3}}, {1, 2}},
                       {{{0, 2, 3}, {1, 2, -1}}, {1, 2, 3, 4}},
                       {{{0, 2, 3}, {2, 3, -1}}, {1, 2, 5, 6}}},
               1};
    p["3F"] = {4, -1, {{{}, {2, 3}},
                       {{{0, 1, -1}}, {0, 1, 2, 3}},
                       {{{1, 2, 3}}, {2, 3, 4, 5}},
                       {{{1, 2, 3}, {2, 2, 3}}, {4, 5}},
                       {{{1, 2, 3}, {2, 2, 3}, {3, 3, -1}}, {4, 5, 6, 7}}},
               3};
    p["3G"] = {2, -1, {{{}, {0, 1, 2, 3}},
                       {{{0, 2, 3}}, {2, 3}},
                       {{{0, 2, 3}, {1, 3, -1}}, {2, 3, 4, 5}}},
               1};
    p["3H"] = {1, -1, {{{}, {0, 1, 2, 3}}, {{{0, 2, 3}}, {2, 3, 4}}}, 1};
    p["3I"] = {1, 0, {{{}, {0, 1, 2, 3}}, {{{0, 2, 3}}, {2, 3}}}, 1};
    p["3J"] = {3, 2, {{{}, {0, 3, 4}},
                      {{{0, 0, -1}}, {0, 1, 2, 4}},
                      {{{1, 1, -1}}, {0, 1, 2, 3}},
                      {{{2, 2, 3}}, {3, 4}}},
               3};
    return p;
  }();
  auto it = programs.find(motif);
  if (it == programs.end()) throw domain_error("no anchor program for motif " + motif);
  return it->second;
}

inline std::array<int, 4> offset_direction(const AnchorOffset& off,
                                           const std::array<int, 4>& exits) {
  std::array<int, 4> dir = {0, 0, 0, 0};
  dir[exits[off.slot_a]] += 1;
  if (off.slot_b >= 0) dir[exits[off.slot_b]] += 1;
  return dir;
}

// Linear form of ell_e evaluated at the anchor point, over the
// variables (C_0..C_19, p_1, p_2, p_3, scalars...).
inline IVec form_at_anchor(const AnchorPoint& anchor, const std::array<int, 4>& exits,
                           int e, int num_scalars) {
  IVec form(20 + 3 + num_scalars, Int(0));
  form[e] += 1;
  for (int m = 1; m < 4; ++m) form[20 + m - 1] += kCubicExponents[e][m];
  for (const auto& off : anchor.offsets) {
    auto dir = offset_direction(off, exits);
    Int coeff = 0;
    for (int a = 0; a < 4; ++a) coeff += kCubicExponents[e][a] * dir[a];
    form[23 + off.scalar] += coeff;
  }
  return form;
}

inline IVec sub_forms(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

inline std::vector<int> block_points(const AnchorPoint& anchor, const MotifOccurrence& R) {
  std::set<int> pts;
  for (int label : anchor.block) pts.insert(R.points[label]);
  return {pts.begin(), pts.end()};
}

inline Cone anchor_system(const MotifOccurrence& R) {
  const AnchorProgram& prog = anchor_program(R.motif);
  Cone K;
  K.n = 20 + 3 + static_cast<size_t>(prog.num_scalars);
  for (const auto& anchor : prog.anchors) {
    std::vector<int> block = block_points(anchor, R);
    IVec base = form_at_anchor(anchor, R.exits, block[0], prog.num_scalars);
    for (size_t b = 1; b < block.size(); ++b) {
      add_eq(K, sub_forms(form_at_anchor(anchor, R.exits, block[b], prog.num_scalars), base));
    }
    for (int e = 0; e < kNumPoints; ++e) {
      if (std::find(block.begin(), block.end(), e) != block.end()) continue;
      add_ineq(K, sub_forms(form_at_anchor(anchor, R.exits, e, prog.num_scalars), base));
    }
  }
  for (int s = 0; s < prog.num_scalars; ++s) {
    IVec pos(K.n, Int(0));
    pos[23 + s] = 1;
    add_ineq(K, std::move(pos));
  }
  return K;
}

}  // namespace schlaeflidetail

inline VisibilityCone visibility_cone(const Triangulation& T, const MotifOccurrence& R,
                                      const Cone& secondary_facets) {
  using namespace schlaeflidetail;
  Cone K = anchor_system(R);
  std::vector<std::size_t> aux;
  for (std::size_t v = 20; v < K.n; ++v) aux.push_back(v);
  Cone proj = project_out(std::move(K), aux);

  // Every projected row implied by the secondary cone is redundant in the
  // intersection; weeding those out first keeps the facet computation on a
  // handful of genuine candidates.
  Cone prefilter = secondary_facets;
  for (const auto& eq : proj.eqs) add_eq(prefilter, eq);
  std::vector<IVec> candidates;
  for (const auto& f : proj.ineqs) {
    if (!implies(prefilter, f)) candidates.push_back(f);
  }
  proj.ineqs = secondary_facets.ineqs;
  for (auto& f : candidates) proj.ineqs.push_back(std::move(f));
  proj = facet_description(std::move(proj));

  VisibilityCone out;
  out.cone = proj;
  for (IVec eq : proj.eqs) {
    normalize_signed(eq);
    out.equations.push_back(std::move(eq));
  }
  Cone base = secondary_facets;
  for (const auto& eq : proj.eqs) add_eq(base, eq);
  for (const auto& f : proj.ineqs) {
    if (!implies(base, f)) out.walls.push_back(f);
  }
  if (!out.equations.empty()) {
    out.classification = Visibility::hardly;
  } else if (!out.walls.empty()) {
    out.classification = Visibility::partial;
  } else {
    out.classification = Visibility::global;
  }
  return out;
}

inline VisibilityCone visibility_cone(const Triangulation& T, const MotifOccurrence& R) {
  return visibility_cone(T, R, facet_description(secondary_cone(T)));
}

struct ClassifiedOccurrence {
  MotifOccurrence occ;
  VisibilityCone cone;
  std::size_t index = 0;  // position in occurrences(T)
};

struct Classification {
  std::vector<ClassifiedOccurrence> global;
  std::vector<ClassifiedOccurrence> partial;
  std::vector<ClassifiedOccurrence> hardly;

  std::size_t total() const { return global.size() + partial.size() + hardly.size(); }

  std::vector<const ClassifiedOccurrence*> all() const {
    std::vector<const ClassifiedOccurrence*> out;
    for (const auto& c : global) out.push_back(&c);
    for (const auto& c : partial) out.push_back(&c);
    for (const auto& c : hardly) out.push_back(&c);
    std::sort(out.begin(), out.end(),
              [](const auto* a, const auto* b) { return a->index < b->index; });
    return out;
  }
};

inline Classification classify_all(const Triangulation& T) {
  Classification out;
  Cone secondary_facets = facet_description(secondary_cone(T));
  std::vector<MotifOccurrence> occs = occurrences(T);
  for (std::size_t r = 0; r < occs.size(); ++r) {
    ClassifiedOccurrence entry{occs[r], visibility_cone(T, occs[r], secondary_facets), r};
    switch (entry.cone.classification) {
      case Visibility::global: out.global.push_back(std::move(entry)); break;
      case Visibility::partial: out.partial.push_back(std::move(entry)); break;
      case Visibility::hardly: out.hardly.push_back(std::move(entry)); break;
    }
  }
  return out;
}

// All Schlaefli walls of T, deduplicated up to sign and scaling.
inline std::vector<IVec> wall_arrangement(const Classification& cls) {
  std::set<IVec> seen;
  for (const auto& entry : cls.partial) {
    for (IVec w : entry.cone.walls) {
      normalize_signed(w);
      seen.insert(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<IVec> wall_arrangement(const Triangulation& T) {
  return wall_arrangement(classify_all(T));
}

// Printable polynomial form of a wall, e.g. "-c2+c9+c11-c15+c17-c18".
inline std::string wall_string(const IVec& form) {
  std::string out;
  for (size_t j = 0; j < form.size(); ++j) {
    if (form[j] == 0) continue;
    if (form[j] > 0 && !out.empty()) out += "+";
    if (form[j] < 0) out += "-";
    Int mag = abs(form[j]);
    if (mag != 1) out += mag.str();
    out += "c" + std::to_string(j);
  }
  return out;
}

struct SchlaefliCell {
  std::vector<int> signs;        // +1/-1 per arrangement wall
  QVec sample;                   // strictly interior point
  std::vector<std::size_t> visible;  // occurrence indices
};

namespace schlaeflidetail {

// Deterministic strictly interior sample: minimize the coordinate sum
// subject to unit slack on every strict inequality and nonnegativity.
inline std::optional<QVec> cell_sample(const std::vector<IVec>& strict, std::size_t n) {
  LinearProgram lp;
  lp.n = n;
  for (const auto& a : strict) {
    QVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = -Rat(a[j]);
    lp.ineq_lhs.push_back(row);
    lp.ineq_rhs.push_back(Rat(-1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    QVec row(n, Rat(0));
    row[j] = -1;
    lp.ineq_lhs.push_back(row);
    lp.ineq_rhs.push_back(Rat(0));
  }
  lp.objective.assign(n, Rat(1));
  LPResult r = solve_min(lp);
  if (r.status != LPStatus::optimal) return std::nullopt;
  r.x.resize(n);
  return r.x;
}

}  // namespace schlaeflidetail

// Full-dimensional cells of the secondary cone cut by the wall
// arrangement, each with a deterministic interior sample and the set of
// occurrences visible there.
inline std::vector<SchlaefliCell> schlaefli_fan(const Triangulation& T,
                                                const Classification& cls) {
  std::vector<IVec> walls = wall_arrangement(cls);
  Cone seccone = secondary_cone(T);
  std::vector<SchlaefliCell> cells;
  const size_t w = walls.size();
  for (size_t bits = 0; bits < (size_t{1} << w); ++bits) {
    std::vector<IVec> strict = seccone.ineqs;
    std::vector<int> signs(w);
    for (size_t m = 0; m < w; ++m) {
      signs[m] = (bits >> m) & 1 ? -1 : 1;
      IVec signed_wall = walls[m];
      for (auto& c : signed_wall) c *= signs[m];
      strict.push_back(signed_wall);
    }
    auto sample = schlaeflidetail::cell_sample(strict, kNumPoints);
    if (!sample) continue;
    SchlaefliCell cell;
    cell.signs = signs;
    cell.sample = *sample;
    for (const auto* entry : cls.all()) {
      if (contains(entry->cone.cone, cell.sample)) cell.visible.push_back(entry->index);
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

inline std::vector<SchlaefliCell> schlaefli_fan(const Triangulation& T) {
  return schlaefli_fan(T, classify_all(T));
}

namespace schlaeflidetail {

inline void require_interior(const Triangulation& T, const QVec& C) {
  Cone seccone = secondary_cone(T);
  if (C.size() != kNumPoints) throw domain_error("need 20 heights");
  for (const auto& fold : seccone.ineqs) {
    if (dot(fold, C) <= 0) {
      throw domain_error("heights are not strictly interior to the secondary cone");
    }
  }
}

}  // namespace schlaeflidetail

// Indices of all occurrences whose visibility cone contains C.
inline std::vector<std::size_t> visible_motifs(const Triangulation& T, const QVec& C,
                                               const Classification& cls) {
  schlaeflidetail::require_interior(T, C);
  std::vector<std::size_t> out;
  for (const auto* entry : cls.all()) {
    if (contains(entry->cone.cone, C)) out.push_back(entry->index);
  }
  return out;
}

inline std::vector<std::size_t> visible_motifs(const Triangulation& T, const QVec& C) {
  return visible_motifs(T, C, classify_all(T));
}

struct GenericityReport {
  bool generic = true;
  std::vector<IVec> vanishing_walls;
  std::vector<std::size_t> hardly_visible;
};

// A surface is generic when its heights avoid every Schlaefli wall and
// every hardly-visible locus.
inline GenericityReport is_generic(const Triangulation& T, const QVec& C,
                                   const Classification& cls) {
  schlaeflidetail::require_interior(T, C);
  GenericityReport report;
  for (const auto& w : wall_arrangement(cls)) {
    if (dot(w, C) == 0) report.vanishing_walls.push_back(w);
  }
  for (const auto& entry : cls.hardly) {
    if (contains(entry.cone.cone, C)) report.hardly_visible.push_back(entry.index);
  }
  report.generic = report.vanishing_walls.empty() && report.hardly_visible.empty();
  return report;
}

inline GenericityReport is_generic(const Triangulation& T, const QVec& C) {
  return is_generic(T, C, classify_all(T));
}

// The tropical line certified by an occurrence at concrete heights:
// the anchor equalities pin the auxiliary variables (up to the family
// parameter, which is placed strictly inside its feasible interval).
struct OccurrenceLine {
  QVec v1;
  QVec v2;
  Pluecker pluecker;
};

inline std::optional<OccurrenceLine> line_of_occurrence(const MotifOccurrence& R,
                                                        const QVec& C) {
  using namespace schlaeflidetail;
  const AnchorProgram& prog = anchor_program(R.motif);
  const size_t na = 3 + static_cast<size_t>(prog.num_scalars);

  QMat A;
  QVec rhs;
  Cone K = anchor_system(R);
  for (const auto& eq : K.eqs) {
    QVec row(na);
    for (size_t v = 0; v < na; ++v) row[v] = Rat(eq[20 + v]);
    A.push_back(row);
    Rat b = 0;
    for (int e = 0; e < kNumPoints; ++e) b -= eq[e] * C[e];
    rhs.push_back(b);
  }
  LinearSolution sol = solve_linear(A, rhs);
  if (!sol.consistent) return std::nullopt;

  if (prog.family_scalar >= 0) {
    // Intersect the inequality constraints over the family parameter.
    const size_t fam = 3 + static_cast<size_t>(prog.family_scalar);
    Rat lo = 0;
    std::optional<Rat> hi;
    for (const auto& f : K.ineqs) {
      Rat coeff = Rat(f[20 + fam]);
      Rat rest = 0;
      for (int e = 0; e < kNumPoints; ++e) rest += f[e] * C[e];
      for (size_t v = 0; v < na; ++v) {
        if (v != fam) rest += f[20 + v] * sol.x[v];
      }
      if (coeff == 0) {
        if (rest < 0) return std::nullopt;
      } else if (coeff > 0) {
        Rat bound = -rest / coeff;
        if (bound > lo) lo = bound;
      } else {
        Rat bound = -rest / coeff;
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (hi && *hi < lo) return std::nullopt;
    sol.x[fam] = hi ? Rat((lo + *hi) / 2) : Rat(lo + 1);
  }

  // The anchor inequalities must hold at the pinned solution as well.
  for (const auto& f : K.ineqs) {
    Rat val = 0;
    for (int e = 0; e < kNumPoints; ++e) val += f[e] * C[e];
    for (size_t v = 0; v < na; ++v) val += f[20 + v] * sol.x[v];
    if (val < 0) return std::nullopt;
  }

  OccurrenceLine line;
  line.v1 = {Rat(0), sol.x[0], sol.x[1], sol.x[2]};
  line.v2 = line.v1;
  for (const auto& off : prog.anchors[prog.v2_anchor].offsets) {
    auto dir = offset_direction(off, R.exits);
    for (int a = 0; a < 4; ++a) line.v2[a] += sol.x[3 + off.scalar] * dir[a];
  }
  line.pluecker = pluecker_from_vertices(line.v1, line.v2);
  return line;
}

}  // namespace tropcubics
