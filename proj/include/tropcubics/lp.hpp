#pragma once

#include "linalg.hpp"

#include <cstddef>
#include <vector>

namespace tropcubics {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rat value = 0;
    QVec x;
};

/**
 * maximize objective . x
 * subject to ineq_lhs[i] . x <= ineq_rhs[i]
 *            eq_lhs[i] . x  == eq_rhs[i]
 * over unrestricted x in Q^n.
 */
struct LinearProgram {
    std::size_t n = 0;
    QMat ineq_lhs;
    QVec ineq_rhs;
    QMat eq_lhs;
    QVec eq_rhs;
    QVec objective;
};

namespace lpdetail {

inline void pivot(QMat& T, QVec& obj, std::vector<std::size_t>& basis,
                  std::size_t r, std::size_t c) {
    const std::size_t w = T[r].size();
    const Rat inv = Rat(1) / T[r][c];
    for (auto& v : T[r]) v *= inv;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (i == r || T[i][c] == 0) continue;
        const Rat f = T[i][c];
        for (std::size_t j = 0; j < w; ++j) T[i][j] -= f * T[r][j];
    }
    if (obj[c] != 0) {
        const Rat f = obj[c];
        for (std::size_t j = 0; j < w; ++j) obj[j] -= f * T[r][j];
    }
    basis[r] = c;
}

/**
 * Maximizes the canonicalized objective row over {T y = rhs, y >= 0} from
 * the given feasible basis. Bland's rule throughout, so it always stops.
 * Columns >= limit never enter the basis. Returns false iff unbounded.
 */
inline bool simplex(QMat& T, QVec& obj, std::vector<std::size_t>& basis,
                    std::size_t limit) {
    const std::size_t m = T.size();
    const std::size_t rhs = obj.size() - 1;
    for (;;) {
        std::size_t enter = rhs;
        for (std::size_t j = 0; j < limit; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == rhs) return true;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][rhs] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return false;
        pivot(T, obj, basis, leave, enter);
    }
}

} // namespace lpdetail

/** Exact two-phase simplex. */
inline LPResult solve(const LinearProgram& lp) {
    using namespace lpdetail;
    LPResult out;
    const std::size_t n = lp.n;
    const std::size_t mi = lp.ineq_lhs.size();
    const std::size_t me = lp.eq_lhs.size();
    const std::size_t m = mi + me;
    // columns: u (n), v (n) with x = u - v, slacks (mi), artificials (m), rhs
    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + mi;
    const std::size_t rhs = art0 + m;

    QMat T(m, QVec(rhs + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const QVec& a = i < mi ? lp.ineq_lhs[i] : lp.eq_lhs[i - mi];
        Rat b = i < mi ? lp.ineq_rhs[i] : lp.eq_rhs[i - mi];
        if (a.size() != n) throw domain_error("solve: constraint arity mismatch");
        Rat s = b < 0 ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) {
            T[i][j] = s * a[j];
            T[i][n + j] = -s * a[j];
        }
        if (i < mi) T[i][slack0 + i] = s;
        T[i][art0 + i] = 1;
        T[i][rhs] = s * b;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

    // phase 1: maximize -sum(artificials), canonicalized against the basis
    QVec obj(rhs + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= rhs; ++j)
            if (j < art0 || j == rhs) obj[j] += T[i][j];
    simplex(T, obj, basis, art0);
    if (obj[rhs] != 0) {
        out.status = LPStatus::infeasible;
        return out;
    }
    // drive leftover artificials out of the basis; drop rows that turn out
    // to be dependent
    for (std::size_t i = 0; i < T.size();) {
        if (basis[i] < art0) {
            ++i;
            continue;
        }
        std::size_t c = art0;
        for (std::size_t j = 0; j < art0; ++j)
            if (T[i][j] != 0) {
                c = j;
                break;
            }
        if (c < art0) {
            pivot(T, obj, basis, i, c);
            ++i;
        } else {
            T.erase(T.begin() + static_cast<std::ptrdiff_t>(i));
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // phase 2
    QVec cost(rhs + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = lp.objective[j];
        cost[n + j] = -lp.objective[j];
    }
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (cost[basis[i]] == 0) continue;
        const Rat f = cost[basis[i]];
        for (std::size_t j = 0; j <= rhs; ++j) cost[j] -= f * T[i][j];
    }
    // cost[rhs] now holds -objective(current basic solution)
    if (!simplex(T, cost, basis, art0)) {
        out.status = LPStatus::unbounded;
        return out;
    }
    out.status = LPStatus::optimal;
    out.x.assign(n, Rat(0));
    QVec y(art0, Rat(0));
    for (std::size_t i = 0; i < T.size(); ++i)
        if (basis[i] < art0) y[basis[i]] = T[i][rhs];
    for (std::size_t j = 0; j < n; ++j) out.x[j] = y[j] - y[n + j];
    out.value = -cost[rhs];
    return out;
}

inline LPResult solve_min(LinearProgram lp) {
    for (auto& c : lp.objective) c = -c;
    LPResult r = solve(lp);
    if (r.status == LPStatus::optimal) r.value = -r.value;
    return r;
}

} // namespace tropcubics
