#pragma once

#include "cone.hpp"
#include "triangulation.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tropcubics {

/**
 * A tropical cubic surface is the locus where the minimum of the 20 forms
 * C_e + A_e . x (A_e the exponent vector of point e) is attained at least
 * twice. Points x live in R^4 modulo the all-ones vector; representatives
 * returned by this library have first coordinate 0.
 */

inline Rat form_value(const QVec& C, int e, const QVec& x) {
    Rat v = C[static_cast<std::size_t>(e)];
    for (std::size_t a = 0; a < 4; ++a)
        v += Rat(kCubicExponents[static_cast<std::size_t>(e)][a]) * x[a];
    return v;
}

inline Rat surface_min(const QVec& C, const QVec& x) {
    Rat best = form_value(C, 0, x);
    for (int e = 1; e < static_cast<int>(kNumPoints); ++e)
        best = std::min(best, form_value(C, e, x));
    return best;
}

inline std::vector<int> attaining_forms(const QVec& C, const QVec& x) {
    Rat best = surface_min(C, x);
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(kNumPoints); ++e)
        if (form_value(C, e, x) == best) out.push_back(e);
    return out;
}

inline bool point_on_surface(const QVec& C, const QVec& x) {
    return attaining_forms(C, x).size() >= 2;
}

/**
 * Regular subdivision of the 20 lattice points induced by the heights C:
 * the inclusion-maximal sets on which some affine function with values
 * everywhere below the heights is tight.
 */
inline std::vector<Cell> dual_subdivision(const QVec& C) {
    if (C.size() != kNumPoints) throw domain_error("dual_subdivision: need 20 heights");
    std::set<Cell> cells;
    for (int a = 0; a < 20; ++a)
        for (int b = a + 1; b < 20; ++b)
            for (int c = b + 1; c < 20; ++c)
                for (int d = c + 1; d < 20; ++d) {
                    QMat M;
                    QVec rhs;
                    for (int e : {a, b, c, d}) {
                        QVec row = {Rat(1), Rat(kCubicExponents[static_cast<std::size_t>(e)][1]),
                                    Rat(kCubicExponents[static_cast<std::size_t>(e)][2]),
                                    Rat(kCubicExponents[static_cast<std::size_t>(e)][3])};
                        M.push_back(std::move(row));
                        rhs.push_back(C[static_cast<std::size_t>(e)]);
                    }
                    if (rank(M) < 4) continue;
                    LinearSolution sol = solve_linear(M, rhs);
                    if (!sol.consistent) continue;
                    Cell cell;
                    bool below = true;
                    for (int e = 0; e < 20 && below; ++e) {
                        Rat v = sol.x[0];
                        for (std::size_t j = 1; j < 4; ++j)
                            v += sol.x[j] * Rat(kCubicExponents[static_cast<std::size_t>(e)][j]);
                        if (v > C[static_cast<std::size_t>(e)])
                            below = false;
                        else if (v == C[static_cast<std::size_t>(e)])
                            cell.push_back(e);
                    }
                    if (below) cells.insert(cell);
                }
    std::vector<Cell> out;
    for (const auto& c : cells) {
        bool maximal = true;
        for (const auto& d : cells)
            if (c != d && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

/** True iff the heights induce a unimodular triangulation on all 20 points. */
inline bool is_smooth(const QVec& C) {
    std::vector<Cell> cells = dual_subdivision(C);
    try {
        validate(cells);
    } catch (const domain_error&) {
        return false;
    }
    return true;
}

/**
 * The affine relation carried by an interior triangle and the two apexes of
 * its incident tetrahedra, as a linear form on height space, normalized to
 * be positive on the apexes. Heights strictly inside the secondary cone make
 * every such form positive.
 */
inline IVec fold_form(const Triangulation& T, const Cell& tri) {
    std::vector<int> apexes;
    for (const auto& c : T) {
        if (!std::includes(c.begin(), c.end(), tri.begin(), tri.end())) continue;
        for (int p : c)
            if (!std::binary_search(tri.begin(), tri.end(), p)) apexes.push_back(p);
    }
    if (apexes.size() != 2) throw domain_error("fold_form: triangle is not interior");
    std::vector<int> pts = {tri[0], tri[1], tri[2], apexes[0], apexes[1]};
    QMat M(4, QVec(5));
    for (std::size_t col = 0; col < 5; ++col) {
        M[0][col] = 1;
        for (std::size_t j = 1; j < 4; ++j)
            M[j][col] = Rat(kCubicExponents[static_cast<std::size_t>(pts[col])][j]);
    }
    std::vector<QVec> ker = kernel_basis(M);
    if (ker.size() != 1) throw domain_error("fold_form: degenerate point configuration");
    IVec lambda = to_primitive_integer(ker[0]);
    if (lambda[4] < 0)
        for (auto& v : lambda) v = -v;
    if (lambda[3] <= 0 || lambda[4] <= 0)
        throw domain_error("fold_form: apex coefficients are not positive");
    IVec form(kNumPoints, 0);
    for (std::size_t col = 0; col < 5; ++col) form[static_cast<std::size_t>(pts[col])] += lambda[col];
    return form;
}

/**
 * Cone of height vectors inducing the given triangulation, cut out by one
 * fold inequality per interior triangle.
 */
inline Cone secondary_cone(const Triangulation& T) {
    Cone K;
    K.n = kNumPoints;
    for (const auto& tri : interior_triangles(T)) add_ineq(K, fold_form(T, tri));
    return K;
}

/** The surface vertex dual to a tetrahedron, as the representative with x_0 = 0. */
inline QVec vertex_of_tetra(const QVec& C, const Cell& tet) {
    if (tet.size() != 4) throw domain_error("vertex_of_tetra: need a tetrahedron");
    QMat M;
    QVec rhs;
    for (int i = 1; i < 4; ++i) {
        QVec row(3);
        for (std::size_t j = 0; j < 3; ++j)
            row[j] = Rat(kCubicExponents[static_cast<std::size_t>(tet[static_cast<std::size_t>(i)])][j + 1] -
                         kCubicExponents[static_cast<std::size_t>(tet[0])][j + 1]);
        M.push_back(std::move(row));
        rhs.push_back(C[static_cast<std::size_t>(tet[0])] - C[static_cast<std::size_t>(tet[static_cast<std::size_t>(i)])]);
    }
    if (rank(M) < 3) throw domain_error("vertex_of_tetra: degenerate tetrahedron");
    LinearSolution sol = solve_linear(M, rhs);
    return {Rat(0), sol.x[0], sol.x[1], sol.x[2]};
}

} // namespace tropcubics
