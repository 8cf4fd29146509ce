#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclotqft {

/* Exact dense linear algebra over a field-like scalar type T.
 *
 * T needs +, -, *, / (exact), == and an ADL-visible is_zero(const T&).
 * Elimination is fraction-free in the Bareiss style: every 2x2 cross update is
 * divided by the previous pivot, which keeps intermediate entries as small as
 * the arithmetic allows and stays exact in any integral domain with exact
 * division. Pivoting picks the first nonzero entry in the column (there is no
 * magnitude ordering for the scalars used here).
 */

template <typename T>
struct LinearSolution {
    bool solvable = false;
    std::vector<std::vector<T>> x;  // k x m when solvable
};

/** Solves A X = B exactly. A is n x k with full column rank, B is n x m.
 *  Returns solvable=false when A is rank-deficient or the system is
 *  inconsistent (for n > k the extra rows must reduce to zero). */
template <typename T>
LinearSolution<T> solve_exact(std::vector<std::vector<T>> a,
                              const std::vector<std::vector<T>>& b, const T& one) {
    const std::size_t n = a.size();
    const std::size_t k = n ? a[0].size() : 0;
    const std::size_t m = n ? b[0].size() : 0;
    if (b.size() != n) throw std::invalid_argument("solve_exact: row mismatch");
    const T zero = one - one;
    for (std::size_t i = 0; i < n; ++i) a[i].insert(a[i].end(), b[i].begin(), b[i].end());
    const std::size_t w = k + m;

    T prev = one;
    T prev_inv = one;  // refreshed per pivot; inversion is the costly scalar op
    std::size_t top = 0;  // next pivot row
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = top;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return {};  // rank-deficient
        if (piv != top) std::swap(a[piv], a[top]);
        for (std::size_t r = top + 1; r < n; ++r) {
            if (is_zero(a[r][col])) {
                // still rescale the Bareiss way so later divisions stay exact
                for (std::size_t c = col + 1; c < w; ++c)
                    a[r][c] = (a[r][c] * a[top][col]) * prev_inv;
                continue;
            }
            for (std::size_t c = col + 1; c < w; ++c)
                a[r][c] = (a[r][c] * a[top][col] - a[r][col] * a[top][c]) * prev_inv;
            a[r][col] = zero;
        }
        prev = a[top][col];
        prev_inv = one / prev;
        ++top;
    }

    for (std::size_t r = top; r < n; ++r)
        for (std::size_t c = 0; c < w; ++c)
            if (!is_zero(a[r][c])) return {};  // inconsistent

    LinearSolution<T> out;
    out.x.assign(k, std::vector<T>(m, zero));
    for (std::size_t ii = k; ii-- > 0;) {
        const T piv_inv = one / a[ii][ii];
        for (std::size_t j = 0; j < m; ++j) {
            T s = a[ii][k + j];
            for (std::size_t l = ii + 1; l < k; ++l) s = s - a[ii][l] * out.x[l][j];
            out.x[ii][j] = s * piv_inv;
        }
    }
    out.solvable = true;
    return out;
}

/** Determinant of a square matrix, by the same fraction-free elimination. */
template <typename T>
T determinant_exact(std::vector<std::vector<T>> a, const T& one) {
    const std::size_t n = a.size();
    const T zero = one - one;
    T prev_inv = one;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return zero;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            negate = !negate;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) * prev_inv;
            a[r][col] = zero;
        }
        prev_inv = one / a[col][col];
    }
    // after full elimination the last pivot is det(A), up to row-swap sign
    return negate ? (zero - a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace cyclotqft
