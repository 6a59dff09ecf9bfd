#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "tropcubics/lattice.hpp"
#include "tropcubics/linalg.hpp"
#include "tropcubics/lp.hpp"

namespace tropcubics {

using Triangle = std::array<int, 3>;
using PlaneTriangulation = std::vector<Triangle>;

namespace delta2detail {

struct PlanePoint {
  long x;
  long y;
};

inline const std::array<PlanePoint, 10>& plane_points() {
  static const std::array<PlanePoint, 10> pts = [] {
    std::array<PlanePoint, 10> out{};
    for (std::size_t i = 0; i < 10; ++i) {
      out[i] = {kPlaneCubicExponents[i][1], kPlaneCubicExponents[i][2]};
    }
    return out;
  }();
  return pts;
}

inline long orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline std::vector<Triangle> unimodular_triangles() {
  const auto& pts = plane_points();
  std::vector<Triangle> out;
  for (int a = 0; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) {
      for (int c = b + 1; c < 10; ++c) {
        long d = orient(pts[a], pts[b], pts[c]);
        if (d == 1 || d == -1) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline std::array<PlanePoint, 3> ccw(const Triangle& t) {
  const auto& pts = plane_points();
  std::array<PlanePoint, 3> v = {pts[t[0]], pts[t[1]], pts[t[2]]};
  if (orient(v[0], v[1], v[2]) < 0) std::swap(v[1], v[2]);
  return v;
}

inline bool separates(const std::array<PlanePoint, 3>& from,
                      const std::array<PlanePoint, 3>& other) {
  for (int e = 0; e < 3; ++e) {
    const PlanePoint& a = from[e];
    const PlanePoint& b = from[(e + 1) % 3];
    bool all_out = true;
    for (const auto& q : other) {
      if (orient(a, b, q) > 0) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

inline bool interiors_overlap(const Triangle& s, const Triangle& t) {
  auto vs = ccw(s), vt = ccw(t);
  return !separates(vs, vt) && !separates(vt, vs);
}

}  // namespace delta2detail

// All unimodular triangulations of the triple triangle, as sorted lists
// of 9 sorted vertex triples. Nine pairwise interior-disjoint unit
// triangles exhaust the area, so they always form a triangulation.
inline std::vector<PlaneTriangulation> delta2_triangulations() {
  using namespace delta2detail;
  std::vector<Triangle> cand = unimodular_triangles();
  const std::size_t n = cand.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ok[i][j] = ok[j][i] = !interiors_overlap(cand[i], cand[j]);
    }
  }
  std::vector<PlaneTriangulation> out;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;

  auto search = [&](auto&& self, std::size_t start, const std::vector<std::size_t>& live) -> void {
    if (chosen.size() == 9) {
      PlaneTriangulation T;
      for (std::size_t idx : chosen) T.push_back(cand[idx]);
      std::sort(T.begin(), T.end());
      out.push_back(std::move(T));
      return;
    }
    for (std::size_t k = start; k < live.size(); ++k) {
      if (live.size() - k + chosen.size() < 9) break;
      std::size_t idx = live[k];
      std::vector<std::size_t> next;
      for (std::size_t m = k + 1; m < live.size(); ++m) {
        if (ok[idx][live[m]]) next.push_back(live[m]);
      }
      chosen.push_back(idx);
      self(self, 0, next);
      chosen.pop_back();
    }
  };
  search(search, 0, pool);
  std::sort(out.begin(), out.end());
  return out;
}

// Local convexity across every interior edge, phrased as an LP with
// unit slack on each strict inequality.
inline bool delta2_is_regular(const PlaneTriangulation& T) {
  using namespace delta2detail;
  const auto& pts = plane_points();
  std::map<std::pair<int, int>, std::vector<std::size_t>> edges;
  for (std::size_t t = 0; t < T.size(); ++t) {
    for (int e = 0; e < 3; ++e) {
      int u = T[t][e], v = T[t][(e + 1) % 3];
      edges[{std::min(u, v), std::max(u, v)}].push_back(t);
    }
  }
  LinearProgram lp;
  lp.n = 10;
  for (const auto& [edge, tris] : edges) {
    if (tris.size() != 2) continue;
    const Triangle& t1 = T[tris[0]];
    const Triangle& t2 = T[tris[1]];
    auto apex = [&](const Triangle& t) {
      for (int p : t) {
        if (p != edge.first && p != edge.second) return p;
      }
      throw domain_error("degenerate edge");
    };
    int a1 = apex(t1), a2 = apex(t2);
    QMat M(3, QVec(3));
    int base[3] = {edge.first, edge.second, a1};
    for (int col = 0; col < 3; ++col) {
      M[0][col] = Rat(pts[base[col]].x);
      M[1][col] = Rat(pts[base[col]].y);
      M[2][col] = Rat(1);
    }
    QVec rhs = {Rat(pts[a2].x), Rat(pts[a2].y), Rat(1)};
    LinearSolution mu = solve_linear(M, rhs);
    if (!mu.consistent) throw domain_error("bad affine system");
    QVec row(10, Rat(0));
    row[a2] -= 1;
    for (int col = 0; col < 3; ++col) row[base[col]] += mu.x[col];
    lp.ineq_lhs.push_back(row);  // row . h <= -1, i.e. fold >= 1
    lp.ineq_rhs.push_back(Rat(-1));
  }
  lp.objective.assign(10, Rat(0));
  return solve(lp).status == LPStatus::optimal;
}

// Orbits under permuting the three homogeneous coordinates.
inline std::size_t delta2_orbit_count(const std::vector<PlaneTriangulation>& all) {
  std::vector<std::array<int, 10>> actions;
  std::array<int, 3> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    std::array<int, 10> act{};
    for (int i = 0; i < 10; ++i) {
      Exponent3 img{};
      for (int a = 0; a < 3; ++a) img[perm[a]] = kPlaneCubicExponents[i][a];
      for (int j = 0; j < 10; ++j) {
        if (kPlaneCubicExponents[j] == img) act[i] = j;
      }
    }
    actions.push_back(act);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<PlaneTriangulation> reps;
  for (const auto& T : all) {
    PlaneTriangulation best;
    for (const auto& act : actions) {
      PlaneTriangulation img;
      for (const auto& t : T) {
        Triangle s = {act[t[0]], act[t[1]], act[t[2]]};
        std::sort(s.begin(), s.end());
        img.push_back(s);
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
    reps.insert(best);
  }
  return reps.size();
}

struct Delta2Census {
  std::size_t triangulations = 0;
  std::size_t orbits = 0;
  std::size_t regular = 0;
};

inline Delta2Census delta2_census() {
  Delta2Census census;
  auto all = delta2_triangulations();
  census.triangulations = all.size();
  census.orbits = delta2_orbit_count(all);
  for (const auto& T : all) {
    if (delta2_is_regular(T)) census.regular += 1;
  }
  return census;
}

}  // namespace tropcubics
