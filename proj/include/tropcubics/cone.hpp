#pragma once

#include "lp.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace tropcubics {

/**
 * Rational polyhedral cone {x : a.x >= 0 for a in ineqs, b.x == 0 for b in
 * eqs}, with integer primitive normal vectors.
 */
struct Cone {
    std::size_t n = 0;
    std::vector<IVec> ineqs;
    std::vector<IVec> eqs;
};

inline bool is_zero(const IVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

inline void add_ineq(Cone& K, IVec a) {
    if (a.size() != K.n) throw domain_error("add_ineq: arity mismatch");
    make_primitive(a);
    if (!is_zero(a)) K.ineqs.push_back(std::move(a));
}

inline void add_eq(Cone& K, IVec a) {
    if (a.size() != K.n) throw domain_error("add_eq: arity mismatch");
    make_primitive(a);
    if (!is_zero(a)) K.eqs.push_back(std::move(a));
}

inline void dedupe_forms(std::vector<IVec>& forms) {
    std::set<IVec> seen;
    std::vector<IVec> out;
    for (auto& f : forms) {
        if (is_zero(f)) continue;
        if (seen.insert(f).second) out.push_back(std::move(f));
    }
    forms = std::move(out);
}

inline bool contains(const Cone& K, const QVec& x) {
    for (const auto& a : K.ineqs)
        if (dot(a, x) < 0) return false;
    for (const auto& a : K.eqs)
        if (dot(a, x) != 0) return false;
    return true;
}

namespace conedetail {

inline LinearProgram base_lp(const Cone& K, std::size_t extra_vars = 0) {
    LinearProgram lp;
    lp.n = K.n + extra_vars;
    for (const auto& a : K.ineqs) {
        QVec row(lp.n, Rat(0));
        for (std::size_t j = 0; j < K.n; ++j) row[j] = -Rat(a[j]);
        lp.ineq_lhs.push_back(std::move(row));
        lp.ineq_rhs.push_back(0);
    }
    for (const auto& a : K.eqs) {
        QVec row(lp.n, Rat(0));
        for (std::size_t j = 0; j < K.n; ++j) row[j] = Rat(a[j]);
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(0);
    }
    lp.objective.assign(lp.n, Rat(0));
    return lp;
}

} // namespace conedetail

/** True iff form . x >= 0 holds everywhere on K. */
inline bool implies(const Cone& K, const IVec& form) {
    LinearProgram lp = conedetail::base_lp(K);
    QVec row(K.n);
    for (std::size_t j = 0; j < K.n; ++j) row[j] = -Rat(form[j]);
    lp.ineq_lhs.push_back(row);
    lp.ineq_rhs.push_back(1); // form.x >= -1 keeps the test bounded
    for (std::size_t j = 0; j < K.n; ++j) lp.objective[j] = -Rat(form[j]);
    LPResult r = solve(lp); // maximize -form.x
    if (r.status == LPStatus::infeasible) return true;
    return r.value <= 0;
}

/** A point with every inequality strictly positive, if one exists. */
inline std::optional<QVec> interior_point(const Cone& K) {
    LinearProgram lp = conedetail::base_lp(K, 1);
    const std::size_t t = K.n;
    for (auto& row : lp.ineq_lhs) row[t] = 1; // a.x >= t
    QVec cap(lp.n, Rat(0));
    cap[t] = 1;
    lp.ineq_lhs.push_back(cap);
    lp.ineq_rhs.push_back(1); // t <= 1
    lp.objective[t] = 1;
    LPResult r = solve(lp);
    if (r.status != LPStatus::optimal || r.value <= 0) return std::nullopt;
    r.x.resize(K.n);
    return r.x;
}

/** Indices of inequalities that vanish on all of K. */
inline std::vector<std::size_t> implicit_equalities(const Cone& K) {
    // A strictly feasible point rules out implicit equalities wholesale.
    if (interior_point(K)) return {};
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < K.ineqs.size(); ++i) {
        LinearProgram lp = conedetail::base_lp(K);
        QVec row(K.n);
        for (std::size_t j = 0; j < K.n; ++j) {
            row[j] = Rat(K.ineqs[i][j]);
            lp.objective[j] = Rat(K.ineqs[i][j]);
        }
        lp.ineq_lhs.push_back(row);
        lp.ineq_rhs.push_back(1);
        LPResult r = solve(lp);
        if (r.status == LPStatus::optimal && r.value == 0) out.push_back(i);
    }
    return out;
}

/**
 * Moves implicit equalities over to eqs, row reduces the equality system,
 * and rewrites every inequality in normal form modulo the equalities.
 */
inline Cone canonical_form(Cone K) {
    auto impl = implicit_equalities(K);
    std::set<std::size_t> move(impl.begin(), impl.end());
    std::vector<IVec> kept;
    for (std::size_t i = 0; i < K.ineqs.size(); ++i) {
        if (move.count(i))
            K.eqs.push_back(K.ineqs[i]);
        else
            kept.push_back(K.ineqs[i]);
    }
    K.ineqs = std::move(kept);

    QMat E;
    for (const auto& a : K.eqs) E.push_back(to_qvec(a));
    auto pivots = rref(E);
    K.eqs.clear();
    for (std::size_t i = 0; i < pivots.size(); ++i) K.eqs.push_back(to_primitive_integer(E[i]));

    for (auto& a : K.ineqs) {
        QVec q = to_qvec(a);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Rat f = q[pivots[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < K.n; ++j) q[j] -= f * E[i][j];
        }
        a = to_primitive_integer(q);
    }
    dedupe_forms(K.ineqs);
    return K;
}

/** Drops inequalities implied by the remaining ones. */
inline Cone remove_redundant(Cone K) {
    dedupe_forms(K.ineqs);
    for (std::size_t i = 0; i < K.ineqs.size();) {
        IVec form = K.ineqs[i];
        Cone rest = K;
        rest.ineqs.erase(rest.ineqs.begin() + static_cast<std::ptrdiff_t>(i));
        if (implies(rest, form))
            K = std::move(rest);
        else
            ++i;
    }
    return K;
}

/** Irredundant description: canonical form plus redundancy removal. */
inline Cone facet_description(Cone K) { return remove_redundant(canonical_form(std::move(K))); }

inline std::size_t cone_dim(const Cone& K) {
    Cone C = canonical_form(K);
    return C.n - C.eqs.size();
}

inline std::size_t lineality_dim(const Cone& K) {
    QMat rows;
    for (const auto& a : K.ineqs) rows.push_back(to_qvec(a));
    for (const auto& a : K.eqs) rows.push_back(to_qvec(a));
    return K.n - rank(rows);
}

namespace conedetail {

inline IVec substitute(const IVec& f, const IVec& e, std::size_t v) {
    // positive multiple of f plus a multiple of the equality e, zeroing v
    IVec out(f.size());
    if (e[v] > 0)
        for (std::size_t j = 0; j < f.size(); ++j) out[j] = e[v] * f[j] - f[v] * e[j];
    else
        for (std::size_t j = 0; j < f.size(); ++j) out[j] = -e[v] * f[j] + f[v] * e[j];
    make_primitive(out);
    return out;
}

} // namespace conedetail

/**
 * Eliminates the given coordinates (equality substitution when available,
 * Fourier-Motzkin otherwise) and deletes them, so the result lives on the
 * remaining coordinates in their original order.
 */
inline Cone project_out(Cone K, std::vector<std::size_t> vars, bool prune = true) {
    std::vector<bool> gone(K.n, false);
    for (auto v : vars) {
        if (v >= K.n || gone[v]) throw domain_error("project_out: bad variable");
        gone[v] = true;
        std::size_t pick = K.eqs.size();
        for (std::size_t i = 0; i < K.eqs.size(); ++i)
            if (K.eqs[i][v] != 0) {
                pick = i;
                break;
            }
        if (pick < K.eqs.size()) {
            IVec e = K.eqs[pick];
            K.eqs.erase(K.eqs.begin() + static_cast<std::ptrdiff_t>(pick));
            for (auto& f : K.ineqs)
                if (f[v] != 0) f = conedetail::substitute(f, e, v);
            for (auto& f : K.eqs)
                if (f[v] != 0) f = conedetail::substitute(f, e, v);
            dedupe_forms(K.ineqs);
            dedupe_forms(K.eqs);
            continue;
        }
        std::vector<IVec> pos, neg, zero;
        for (auto& f : K.ineqs) {
            if (f[v] > 0)
                pos.push_back(f);
            else if (f[v] < 0)
                neg.push_back(f);
            else
                zero.push_back(f);
        }
        K.ineqs = std::move(zero);
        for (const auto& f : pos)
            for (const auto& g : neg) {
                IVec h(K.n);
                for (std::size_t j = 0; j < K.n; ++j) h[j] = -g[v] * f[j] + f[v] * g[j];
                make_primitive(h);
                if (!is_zero(h)) K.ineqs.push_back(std::move(h));
            }
        dedupe_forms(K.ineqs);
        if (prune && !pos.empty() && !neg.empty()) K = remove_redundant(std::move(K));
    }
    Cone out;
    out.n = K.n - vars.size();
    auto compress = [&](const IVec& f) {
        IVec g;
        g.reserve(out.n);
        for (std::size_t j = 0; j < K.n; ++j) {
            if (gone[j]) {
                if (f[j] != 0) throw domain_error("project_out: variable not eliminated");
                continue;
            }
            g.push_back(f[j]);
        }
        return g;
    };
    for (const auto& f : K.ineqs) out.ineqs.push_back(compress(f));
    for (const auto& f : K.eqs) out.eqs.push_back(compress(f));
    return out;
}

/** Optimizes a linear objective over the cone. */
inline LPResult optimize(const Cone& K, const QVec& objective, bool maximize) {
    LinearProgram lp = conedetail::base_lp(K);
    lp.objective = objective;
    return maximize ? solve(lp) : solve_min(lp);
}

/**
 * Minimizes the coordinate sum over nonnegative integer vectors satisfying
 * a.x >= 1 for every inequality of K (and lying on its equalities).
 * Branch and bound on the exact LP relaxation.
 */
inline std::optional<IVec> min_sum_integer_point(const Cone& K) {
    struct Bound {
        std::size_t var;
        bool upper;
        Int limit;
    };
    LinearProgram base = conedetail::base_lp(K);
    for (auto& rhs : base.ineq_rhs) rhs = -1; // -a.x <= -1, i.e. a.x >= 1
    for (std::size_t j = 0; j < K.n; ++j) {
        QVec row(K.n, Rat(0));
        row[j] = -1;
        base.ineq_lhs.push_back(std::move(row));
        base.ineq_rhs.push_back(0); // x_j >= 0
    }
    base.objective.assign(K.n, Rat(1));

    std::optional<IVec> best;
    Int best_sum = 0;

    auto node_lp = [&](const std::vector<Bound>& bounds) {
        LinearProgram lp = base;
        for (const auto& b : bounds) {
            QVec row(K.n, Rat(0));
            row[b.var] = b.upper ? Rat(1) : Rat(-1);
            lp.ineq_lhs.push_back(std::move(row));
            lp.ineq_rhs.push_back(b.upper ? Rat(b.limit) : -Rat(b.limit));
        }
        return solve_min(lp);
    };

    auto record = [&](const IVec& x) {
        Int s = 0;
        for (const auto& c : x) s += c;
        if (!best || s < best_sum) {
            best = x;
            best_sum = s;
        }
    };

    std::vector<std::vector<Bound>> stack;
    stack.push_back({});
    while (!stack.empty()) {
        std::vector<Bound> bounds = std::move(stack.back());
        stack.pop_back();
        LPResult r = node_lp(bounds);
        if (r.status != LPStatus::optimal) continue;
        if (best && ceil_rat(r.value) >= best_sum) continue;
        std::size_t frac = K.n;
        for (std::size_t j = 0; j < K.n; ++j)
            if (!is_integer(r.x[j])) {
                frac = j;
                break;
            }
        if (frac == K.n) {
            IVec x(K.n);
            for (std::size_t j = 0; j < K.n; ++j) x[j] = num(r.x[j]);
            record(x);
            continue;
        }
        if (!best) {
            // scale the rational optimum to an integer feasible point: the
            // constraints a.x >= 1 and x >= 0 survive multiplication by any
            // integer >= 1
            Int scale = 1;
            for (const auto& q : r.x) scale = boost::multiprecision::lcm(scale, den(q));
            IVec x(K.n);
            for (std::size_t j = 0; j < K.n; ++j) x[j] = num(r.x[j]) * (scale / den(r.x[j]));
            record(x);
            if (ceil_rat(r.value) >= best_sum) continue;
        }
        Int fl = floor_rat(r.x[frac]);
        std::vector<Bound> up = bounds, down = bounds;
        down.push_back({frac, true, fl});
        up.push_back({frac, false, fl + 1});
        stack.push_back(std::move(up));
        stack.push_back(std::move(down));
    }
    return best;
}

} // namespace tropcubics
