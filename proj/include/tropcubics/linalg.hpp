#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace tropcubics {

using QMat = std::vector<QVec>;
using IMat = std::vector<IVec>;

/**
 * Reduces M to row echelon form in place (leading entries 1, zeros above and
 * below each pivot). Returns the pivot column of every nonzero row, top down.
 */
inline std::vector<std::size_t> rref(QMat& M) {
    std::vector<std::size_t> pivots;
    if (M.empty()) return pivots;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && M[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[r], M[sel]);
        const Rat inv = Rat(1) / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Rat f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat M) { return rref(M).size(); }

struct LinearSolution {
    bool consistent = false;
    QVec x; // one solution, free coordinates set to zero
};

/** Solves A x = b exactly; inconsistent systems are reported, not thrown. */
inline LinearSolution solve_linear(const QMat& A, const QVec& b) {
    LinearSolution out;
    if (A.size() != b.size()) throw domain_error("solve_linear: row count mismatch");
    if (A.empty()) {
        out.consistent = true;
        return out;
    }
    const std::size_t cols = A[0].size();
    QMat M(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        M[i] = A[i];
        M[i].push_back(b[i]);
    }
    auto pivots = rref(M);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols) return out; // row (0 ... 0 | 1)
    out.consistent = true;
    out.x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = M[i][cols];
    return out;
}

/** Basis of {x : A x = 0}. */
inline std::vector<QVec> kernel_basis(const QMat& A) {
    std::vector<QVec> basis;
    if (A.empty()) return basis;
    const std::size_t cols = A[0].size();
    QMat M = A;
    auto pivots = rref(M);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/** Exact determinant of a square integer matrix (fraction-free elimination). */
inline Int det_bareiss(IMat M) {
    const std::size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n) throw domain_error("det_bareiss: matrix not square");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && M[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(M[k], M[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

} // namespace tropcubics
