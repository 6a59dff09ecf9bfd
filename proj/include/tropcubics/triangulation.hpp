#pragma once

#include "lattice.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropcubics {

using Cell = std::vector<int>; // sorted point indices
using Triangulation = std::vector<Cell>; // sorted cells

inline Triangulation normalized(Triangulation T) {
    for (auto& c : T) std::sort(c.begin(), c.end());
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    return T;
}

/** Edge vectors of a tetra in the chart (x1,x2,x3); unimodular iff |det|=1. */
inline Int tetra_volume(const Cell& c) {
    IMat M(3, IVec(3));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j)
            M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                kCubicExponents[static_cast<std::size_t>(c[static_cast<std::size_t>(r) + 1])][static_cast<std::size_t>(j) + 1] -
                kCubicExponents[static_cast<std::size_t>(c[0])][static_cast<std::size_t>(j) + 1];
    Int d = det_bareiss(M);
    return d < 0 ? Int(-d) : d;
}

template <typename Set>
inline bool subset_on_facet(const Set& pts, int f) {
    for (int p : pts)
        if (!on_facet(p, f)) return false;
    return true;
}

template <typename Set>
inline bool subset_on_boundary(const Set& pts) {
    for (int f = 0; f < 4; ++f)
        if (subset_on_facet(pts, f)) return true;
    return false;
}

inline std::vector<Cell> faces_of(const Cell& c, int dim) {
    std::vector<Cell> out;
    const int k = dim + 1;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(c.size());
    while (true) {
        Cell f;
        for (int i : idx) f.push_back(c[static_cast<std::size_t>(i)]);
        out.push_back(f);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

inline std::vector<Cell> faces_of_complex(const Triangulation& T, int dim) {
    std::set<Cell> faces;
    for (const auto& c : T)
        for (const auto& f : faces_of(c, dim)) faces.insert(f);
    return {faces.begin(), faces.end()};
}

/**
 * Checks that the cell list is a unimodular triangulation of the dilated
 * tetrahedron using all 20 lattice points: 27 distinct unimodular tetrahedra,
 * every point used, and every triangle shared by exactly two tetrahedra or
 * lying in the boundary and belonging to exactly one.
 */
inline void validate(const Triangulation& T_in) {
    Triangulation T = normalized(T_in);
    if (T.size() != 27) throw domain_error("validate: expected 27 tetrahedra");
    std::set<int> used;
    for (const auto& c : T) {
        if (c.size() != 4) throw domain_error("validate: cell is not a tetrahedron");
        std::set<int> distinct(c.begin(), c.end());
        if (distinct.size() != 4) throw domain_error("validate: repeated vertex in a cell");
        for (int p : c) {
            if (p < 0 || p >= static_cast<int>(kNumPoints))
                throw domain_error("validate: point index out of range");
            used.insert(p);
        }
        if (tetra_volume(c) != 1) throw domain_error("validate: cell is not unimodular");
    }
    if (used.size() != kNumPoints) throw domain_error("validate: not all lattice points are used");
    std::map<Cell, int> ridge_count;
    for (const auto& c : T)
        for (const auto& t : faces_of(c, 2)) ++ridge_count[t];
    for (const auto& [t, cnt] : ridge_count) {
        const bool boundary = subset_on_boundary(t);
        if (boundary ? cnt != 1 : cnt != 2)
            throw domain_error("validate: triangle/tetrahedron incidences are inconsistent");
    }
}

inline std::array<std::size_t, 4> f_vector(const Triangulation& T) {
    std::array<std::set<Cell>, 4> faces;
    for (const auto& c : T)
        for (int d = 0; d < 4; ++d)
            for (const auto& f : faces_of(c, d)) faces[static_cast<std::size_t>(d)].insert(f);
    return {faces[0].size(), faces[1].size(), faces[2].size(), faces[3].size()};
}

inline std::array<std::size_t, 3> boundary_f_vector(const Triangulation& T) {
    std::array<std::set<Cell>, 3> faces;
    for (const auto& c : T)
        for (int d = 0; d < 3; ++d)
            for (const auto& f : faces_of(c, d))
                if (subset_on_boundary(f)) faces[static_cast<std::size_t>(d)].insert(f);
    return {faces[0].size(), faces[1].size(), faces[2].size()};
}

inline std::vector<Cell> interior_edges(const Triangulation& T) {
    std::set<Cell> edges;
    for (const auto& c : T)
        for (const auto& e : faces_of(c, 1))
            if (!subset_on_boundary(e)) edges.insert(e);
    return {edges.begin(), edges.end()};
}

inline std::vector<Cell> interior_triangles(const Triangulation& T) {
    std::set<Cell> tris;
    for (const auto& c : T)
        for (const auto& t : faces_of(c, 2))
            if (!subset_on_boundary(t)) tris.insert(t);
    return {tris.begin(), tris.end()};
}

/**
 * Vertices around an interior edge, in cyclic order. The walk starts at the
 * smallest vertex of the link and proceeds toward its smaller neighbor.
 */
inline std::vector<int> link_of_edge(const Triangulation& T, const Cell& edge) {
    std::map<int, std::vector<int>> adj;
    for (const auto& c : T) {
        if (!std::includes(c.begin(), c.end(), edge.begin(), edge.end())) continue;
        std::vector<int> opp;
        for (int p : c)
            if (p != edge[0] && p != edge[1]) opp.push_back(p);
        adj[opp[0]].push_back(opp[1]);
        adj[opp[1]].push_back(opp[0]);
    }
    if (adj.empty()) throw domain_error("link_of_edge: edge not in the triangulation");
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) throw domain_error("link_of_edge: link is not a cycle");
    const int start = adj.begin()->first;
    int prev = start;
    int cur = std::min(adj[start][0], adj[start][1]);
    std::vector<int> cycle = {start};
    while (cur != start) {
        cycle.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != adj.size()) throw domain_error("link_of_edge: link is not a single cycle");
    return cycle;
}

/** Sum of normalized cell volumes around each point. */
inline std::array<Int, 20> gkz_vector(const Triangulation& T) {
    std::array<Int, 20> out{};
    for (const auto& c : T) {
        Int vol = tetra_volume(c);
        for (int p : c) out[static_cast<std::size_t>(p)] += vol;
    }
    return out;
}

/** Histogram of interior-edge link lengths 3,4,5,6. */
inline std::array<std::size_t, 4> b_vector(const Triangulation& T) {
    std::array<std::size_t, 4> out{};
    for (const auto& e : interior_edges(T)) {
        std::size_t len = link_of_edge(T, e).size();
        if (len < 3 || len > 6) throw domain_error("b_vector: unexpected link length");
        out[len - 3] += 1;
    }
    return out;
}

inline Triangulation apply_perm(const Perm4& p, const Triangulation& T) {
    auto act = point_action(p);
    Triangulation out;
    for (const auto& c : T) {
        Cell img;
        for (int v : c) img.push_back(act[static_cast<std::size_t>(v)]);
        out.push_back(img);
    }
    return normalized(out);
}

inline std::vector<Triangulation> coordinate_orbit(const Triangulation& T) {
    std::set<Triangulation> orbit;
    for (const auto& p : all_perm4()) orbit.insert(apply_perm(p, T));
    return {orbit.begin(), orbit.end()};
}

/** max(|det(J J^t)|, |det(J^t J)|) for the point/cell incidence matrix J. */
inline Int altshuler_determinant(const Triangulation& T) {
    const std::size_t np = kNumPoints, nc = T.size();
    std::vector<std::vector<int>> J(np, std::vector<int>(nc, 0));
    for (std::size_t c = 0; c < nc; ++c)
        for (int p : T[c]) J[static_cast<std::size_t>(p)][c] = 1;
    IMat JJt(np, IVec(np, 0)), JtJ(nc, IVec(nc, 0));
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b) {
            Int s = 0;
            for (std::size_t c = 0; c < nc; ++c) s += J[a][c] * J[b][c];
            JJt[a][b] = s;
        }
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b) {
            Int s = 0;
            for (std::size_t p = 0; p < np; ++p) s += J[p][a] * J[p][b];
            JtJ[a][b] = s;
        }
    Int d1 = det_bareiss(JJt), d2 = det_bareiss(JtJ);
    if (d1 < 0) d1 = -d1;
    if (d2 < 0) d2 = -d2;
    return d1 > d2 ? d1 : d2;
}

namespace canondetail {

/** One round of colour refinement; colours are renumbered 0..k-1. */
inline bool refine_once(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
    const std::size_t n = adj.size();
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(color[v]);
        std::vector<int> nb;
        for (int u : adj[v]) nb.push_back(color[static_cast<std::size_t>(u)]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), static_cast<int>(v)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sorted)
        if (!rank.count(s)) {
            int r = static_cast<int>(rank.size());
            rank[s] = r;
        }
    bool changed = false;
    int old_classes = 0;
    {
        std::set<int> oc(color.begin(), color.end());
        old_classes = static_cast<int>(oc.size());
    }
    for (std::size_t v = 0; v < n; ++v) {
        int c = rank[sig[v].first];
        if (c != color[v]) changed = true;
        color[v] = c;
    }
    return changed && static_cast<int>(rank.size()) != old_classes;
}

inline void refine(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
    while (refine_once(adj, color)) {
    }
}

inline std::string leaf_string(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& color, std::size_t np) {
    const std::size_t n = adj.size();
    std::vector<int> pos(n);
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    for (std::size_t r = 0; r < n; ++r) pos[order[r]] = static_cast<int>(r);
    std::string s;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t v = order[r];
        if (v < np) continue; // encode each cell by its point positions
        std::vector<int> row;
        for (int u : adj[v]) row.push_back(pos[static_cast<std::size_t>(u)]);
        std::sort(row.begin(), row.end());
        s += '[';
        for (int x : row) {
            s += std::to_string(x);
            s += ',';
        }
        s += ']';
    }
    return s;
}

inline void canon_search(const std::vector<std::vector<int>>& adj, std::vector<int> color,
                         std::size_t np, std::optional<std::string>& best) {
    refine(adj, color);
    int split = -1;
    std::vector<std::size_t> members;
    std::map<int, std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < adj.size(); ++v) classes[color[v]].push_back(v);
    for (const auto& [c, vs] : classes)
        if (vs.size() > 1) {
            split = c;
            members = vs;
            break;
        }
    if (split < 0) {
        std::string s = leaf_string(adj, color, np);
        if (!best || s < *best) best = s;
        return;
    }
    for (std::size_t v : members) {
        auto next = color;
        int fresh = 0;
        for (int c : next) fresh = std::max(fresh, c + 1);
        next[v] = fresh;
        canon_search(adj, next, np, best);
    }
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace canondetail

/**
 * Label-independent key: canonical form of the point/cell incidence graph,
 * hashed to 16 hex digits. Relabelling the points never changes the key.
 */
inline std::string canonical_key(const Triangulation& T_in) {
    Triangulation T = normalized(T_in);
    std::set<int> pts;
    for (const auto& c : T)
        for (int p : c) pts.insert(p);
    std::map<int, int> dense;
    for (int p : pts) {
        int r = static_cast<int>(dense.size());
        dense[p] = r;
    }
    const std::size_t np = pts.size(), nc = T.size(), n = np + nc;
    std::vector<std::vector<int>> adj(n);
    for (std::size_t c = 0; c < nc; ++c)
        for (int p : T[c]) {
            int dp = dense[p];
            adj[static_cast<std::size_t>(dp)].push_back(static_cast<int>(np + c));
            adj[np + c].push_back(dp);
        }
    std::vector<int> color(n, 0);
    for (std::size_t v = np; v < n; ++v) color[v] = 1;
    std::optional<std::string> best;
    canondetail::canon_search(adj, color, np, best);
    std::uint64_t h = canondetail::fnv1a(*best);
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace tropcubics
