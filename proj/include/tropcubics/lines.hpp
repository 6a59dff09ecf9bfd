#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tropcubics/lattice.hpp"
#include "tropcubics/rational.hpp"

namespace tropcubics {

// Coordinate pairs indexing the six Pluecker coordinates, in the fixed
// order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
inline constexpr std::array<std::array<int, 2>, 6> kPairs = {{
    {{0, 1}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}, {{2, 3}},
}};

inline int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int m = 0; m < 6; ++m) {
    if (kPairs[m][0] == a && kPairs[m][1] == b) return m;
  }
  throw domain_error("pair_index: arguments must be distinct elements of {0,1,2,3}");
}

using Pluecker = std::array<Rat, 6>;

// The three tropical Pluecker terms P01+P23, P02+P13, P03+P12.
inline std::array<Rat, 3> pluecker_terms(const Pluecker& p) {
  return {p[0] + p[5], p[1] + p[4], p[2] + p[3]};
}

// A vector is a tropical Pluecker vector when the minimum of the three
// terms is attained at least twice.
inline bool is_pluecker(const Pluecker& p) {
  auto t = pluecker_terms(p);
  Rat m = std::min({t[0], t[1], t[2]});
  int hits = 0;
  for (const auto& v : t) {
    if (v == m) ++hits;
  }
  return hits >= 2;
}

// Combinatorial types of a tropical line. The type ab|cd means the
// bounded edge separates rays a,b from rays c,d, which happens exactly
// when P_ab + P_cd is the strict maximum of the three terms. When all
// three terms agree the line degenerates to a star with one vertex.
enum class LineType { t01_23, t02_13, t03_12, degenerate };

inline LineType line_type(const Pluecker& p) {
  if (!is_pluecker(p)) throw domain_error("line_type: not a tropical Pluecker vector");
  auto t = pluecker_terms(p);
  if (t[0] > t[1] && t[0] > t[2]) return LineType::t01_23;
  if (t[1] > t[0] && t[1] > t[2]) return LineType::t02_13;
  if (t[2] > t[0] && t[2] > t[1]) return LineType::t03_12;
  return LineType::degenerate;
}

// Action of a coordinate permutation on points of the tropical torus,
// (pi.x)_{pi(a)} = x_a, and on Pluecker vectors by relabeling pairs.
inline QVec apply_perm_point(const Perm4& pi, const QVec& x) {
  QVec y(4);
  for (int a = 0; a < 4; ++a) y[pi[a]] = x[a];
  return y;
}

inline Pluecker apply_perm_pluecker(const Perm4& pi, const Pluecker& p) {
  Pluecker q;
  for (int m = 0; m < 6; ++m) {
    q[pair_index(pi[kPairs[m][0]], pi[kPairs[m][1]])] = p[m];
  }
  return q;
}

// Equality in the tropical torus: x and y differ by a multiple of the
// all-ones vector.
inline bool eq_mod_ones(const QVec& x, const QVec& y) {
  if (x.size() != y.size() || x.empty()) return x.size() == y.size();
  Rat c = y[0] - x[0];
  for (size_t a = 1; a < x.size(); ++a) {
    if (y[a] - x[a] != c) return false;
  }
  return true;
}

// Representative with third coordinate zero, the display convention for
// line vertices.
inline QVec normalize_x2(const QVec& x) {
  QVec y(4);
  for (int a = 0; a < 4; ++a) y[a] = x[a] - x[2];
  return y;
}

struct LineVertices {
  LineType type;
  // Vertex carrying the first pair of rays and vertex carrying the
  // second pair, for the splits 01|23, 02|13, 03|12 respectively.
  QVec first;
  QVec second;
  // Ray directions at each vertex, as coordinate indices.
  std::array<int, 2> first_rays;
  std::array<int, 2> second_rays;
};

namespace linesdetail {

// Vertices for the split 03|12: the vertex with rays e0,e3 and the one
// with rays e1,e2, read off the Pluecker coordinates directly.
inline QVec vertex03(const Pluecker& p) {
  return {p[1] + p[2], p[1] + p[4], p[1] + p[5], p[2] + p[5]};
}

inline QVec vertex12(const Pluecker& p) {
  return {p[1] + p[4], p[3] + p[4], p[3] + p[5], p[4] + p[5]};
}

}  // namespace linesdetail

// The two vertices of a non-degenerate tropical line. The splits other
// than 03|12 are handled by conjugating with the transposition that
// maps them to 03|12.
inline LineVertices line_vertices(const Pluecker& p) {
  LineType ty = line_type(p);
  if (ty == LineType::degenerate) {
    throw domain_error("line_vertices: degenerate line has a single vertex");
  }
  Perm4 pi = {0, 1, 2, 3};
  LineVertices out;
  out.type = ty;
  if (ty == LineType::t01_23) {
    pi = {0, 3, 2, 1};
    out.first_rays = {0, 1};
    out.second_rays = {2, 3};
  } else if (ty == LineType::t02_13) {
    pi = {0, 1, 3, 2};
    out.first_rays = {0, 2};
    out.second_rays = {1, 3};
  } else {
    out.first_rays = {0, 3};
    out.second_rays = {1, 2};
  }
  Pluecker q = apply_perm_pluecker(pi, p);
  out.first = apply_perm_point(pi, linesdetail::vertex03(q));
  out.second = apply_perm_point(pi, linesdetail::vertex12(q));
  return out;
}

// Pluecker vector of the tropical line spanned by two points,
// P_ab = min(u_a + v_b, u_b + v_a).
inline Pluecker pluecker_from_vertices(const QVec& u, const QVec& v) {
  Pluecker p;
  for (int m = 0; m < 6; ++m) {
    int a = kPairs[m][0], b = kPairs[m][1];
    p[m] = std::min(u[a] + v[b], u[b] + v[a]);
  }
  return p;
}

// Equality of Pluecker vectors up to a global additive constant.
inline bool eq_mod_constant(const Pluecker& p, const Pluecker& q) {
  Rat c = q[0] - p[0];
  for (int m = 1; m < 6; ++m) {
    if (q[m] - p[m] != c) return false;
  }
  return true;
}

}  // namespace tropcubics
