#pragma once

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

namespace tropcubics {

/**
 * Lattice points of the dilated tetrahedron 3*Delta_3, i.e. exponent vectors
 * of the 20 degree-3 monomials in 4 variables, in the fixed order used
 * throughout the library. Everything downstream (triangulations, cones,
 * motif data) refers to these points by index.
 */
using Exponent = std::array<int, 4>;

inline constexpr std::array<Exponent, 20> kCubicExponents = {{
    {3, 0, 0, 0}, // 0
    {2, 0, 0, 1}, // 1
    {1, 0, 0, 2}, // 2
    {0, 0, 0, 3}, // 3
    {2, 0, 1, 0}, // 4
    {1, 0, 1, 1}, // 5
    {0, 0, 1, 2}, // 6
    {1, 0, 2, 0}, // 7
    {0, 0, 2, 1}, // 8
    {0, 0, 3, 0}, // 9
    {2, 1, 0, 0}, // 10
    {1, 1, 0, 1}, // 11
    {0, 1, 0, 2}, // 12
    {1, 1, 1, 0}, // 13
    {0, 1, 1, 1}, // 14
    {0, 1, 2, 0}, // 15
    {1, 2, 0, 0}, // 16
    {0, 2, 0, 1}, // 17
    {0, 2, 1, 0}, // 18
    {0, 3, 0, 0}, // 19
}};

inline constexpr std::size_t kNumPoints = kCubicExponents.size();

inline int index_of(const Exponent& e) {
    for (std::size_t i = 0; i < kNumPoints; ++i)
        if (kCubicExponents[i] == e) return static_cast<int>(i);
    throw domain_error("index_of: not a degree-3 exponent vector");
}

/** Points lying on the tetrahedron facet {x_f = 0}, in index order. */
inline std::vector<int> facet_points(int f) {
    if (f < 0 || f > 3) throw domain_error("facet_points: facet index out of range");
    std::vector<int> out;
    for (std::size_t i = 0; i < kNumPoints; ++i)
        if (kCubicExponents[i][static_cast<std::size_t>(f)] == 0)
            out.push_back(static_cast<int>(i));
    return out;
}

inline bool on_facet(int point, int f) {
    return kCubicExponents[static_cast<std::size_t>(point)][static_cast<std::size_t>(f)] == 0;
}

/**
 * Representative of the ray direction omega_a in R^4 / R(1,1,1,1): the unit
 * vector e_a. Any two representatives differ by a multiple of the all-ones
 * vector.
 */
inline QVec direction(int a) {
    if (a < 0 || a > 3) throw domain_error("direction: coordinate index out of range");
    QVec v(4, Rat(0));
    v[static_cast<std::size_t>(a)] = 1;
    return v;
}

/** Permutation of {0,1,2,3}; perm[i] is the image of i. */
using Perm4 = std::array<int, 4>;

inline Perm4 inverse(const Perm4& p) {
    Perm4 q{};
    for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    return q;
}

inline Perm4 compose(const Perm4& p, const Perm4& q) {
    // (p*q)(i) = p(q(i))
    Perm4 r{};
    for (int i = 0; i < 4; ++i)
        r[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
    return r;
}

/** Coordinate permutation acting on exponent vectors: (p.e)_{p(a)} = e_a. */
inline Exponent apply_perm(const Perm4& p, const Exponent& e) {
    Exponent out{};
    for (int a = 0; a < 4; ++a)
        out[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])] = e[static_cast<std::size_t>(a)];
    return out;
}

/** Induced permutation of the 20 point indices. */
inline std::array<int, 20> point_action(const Perm4& p) {
    std::array<int, 20> out{};
    for (std::size_t i = 0; i < kNumPoints; ++i)
        out[i] = index_of(apply_perm(p, kCubicExponents[i]));
    return out;
}

inline std::vector<Perm4> all_perm4() {
    std::vector<Perm4> out;
    Perm4 p = {0, 1, 2, 3};
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/**
 * Lattice points of 3*Delta_2 (degree-3 monomials in 3 variables), used by
 * the planar triangulation census.
 */
using Exponent3 = std::array<int, 3>;

inline constexpr std::array<Exponent3, 10> kPlaneCubicExponents = {{
    {3, 0, 0}, // 0
    {2, 1, 0}, // 1
    {1, 2, 0}, // 2
    {0, 3, 0}, // 3
    {2, 0, 1}, // 4
    {1, 1, 1}, // 5
    {0, 2, 1}, // 6
    {1, 0, 2}, // 7
    {0, 1, 2}, // 8
    {0, 0, 3}, // 9
}};

inline int det3(long a, long b, long c, long d) { return static_cast<int>(a * d - b * c); }

} // namespace tropcubics
