#pragma once

#include "totalpos/matrix.hpp"

#include <utility>
#include <vector>

namespace totalpos {

namespace detail {

// Bareiss fraction-free elimination over the integers. Exact divisions only;
// intermediate entries stay within the minor bound, which keeps rational
// blow-up under control compared to plain Gaussian elimination.
inline Integer bareissDeterminant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    return sign > 0 ? det : Integer(-det);
}

} // namespace detail

// Exact determinant. Rows are scaled integral first so the elimination runs
// fraction-free; the scaling product is divided back out at the end.
inline Rational determinant(const Matrix& a) {
    if (!a.isSquare()) throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer rowLcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            rowLcm = lcm(rowLcm, denominator(a(i, j)));
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = numerator(a(i, j)) * (rowLcm / denominator(a(i, j)));
        scale *= rowLcm;
    }
    return makeRational(detail::bareissDeterminant(std::move(m)), std::move(scale));
}

// Minor on 1-based strictly increasing index sets; the empty minor is 1.
inline Rational minor(const Matrix& a, const std::vector<int>& rowIdx,
                      const std::vector<int>& colIdx) {
    if (rowIdx.size() != colIdx.size())
        throw std::invalid_argument("index sets of unequal size");
    if (rowIdx.empty()) return 1;
    return determinant(a.submatrix(rowIdx, colIdx));
}

namespace detail {

inline std::vector<int> eraseIndex(std::vector<int> idx, int value) {
    std::erase(idx, value);
    return idx;
}

inline std::vector<int> fullIndexSet(std::size_t n) {
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i) + 1;
    return idx;
}

// A^{ij}: determinant of the submatrix with row i and column j deleted
// (unsigned), with the 1x1 convention A^{11} := 1.
inline Rational deletedMinor(const Matrix& a, int i, int j) {
    const auto all = fullIndexSet(a.rows());
    return minor(a, eraseIndex(all, i), eraseIndex(all, j));
}

} // namespace detail

// adj(A), satisfying A adj(A) = adj(A) A = det(A) I exactly; the adjugate of
// a 1x1 matrix is [[1]].
inline Matrix adjugate(const Matrix& a) {
    if (!a.isSquare()) throw std::invalid_argument("adjugate requires a square matrix");
    const std::size_t n = a.rows();
    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = detail::deletedMinor(a, static_cast<int>(j) + 1, static_cast<int>(i) + 1);
            adj(i, j) = ((i + j) % 2 == 0) ? c : Rational(-c);
        }
    return adj;
}

// All r x r contiguous windows, row-major by anchor.
inline std::vector<IndexWindow> contiguousWindows(const Matrix& a, int r) {
    if (r < 1 || static_cast<std::size_t>(r) > a.rows() || static_cast<std::size_t>(r) > a.cols())
        throw std::invalid_argument("window size out of range");
    std::vector<IndexWindow> out;
    out.reserve((a.rows() - r + 1) * (a.cols() - r + 1));
    for (std::size_t i = 0; i + r <= a.rows(); ++i)
        for (std::size_t j = 0; j + r <= a.cols(); ++j)
            out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, r});
    return out;
}

struct LcpTestVectors {
    Vector x; // (A^{11}, 0, A^{13}, 0, ...)^T
    Vector q; // -A x
};

// The single LCP test pair: x alternates first-row deleted minors with
// zeros, q = -Ax, so x is complementary-feasible whenever the deleted minors
// are non-negative.
inline LcpTestVectors lcpTestVector(const Matrix& ar) {
    if (!ar.isSquare()) throw std::invalid_argument("square matrix required");
    const std::size_t r = ar.rows();
    Vector x(r, Rational(0));
    for (std::size_t j = 0; j < r; j += 2)
        x[j] = detail::deletedMinor(ar, 1, static_cast<int>(j) + 1);
    return {x, negate(matVec(ar, x))};
}

// Column j of adj(A_r): for j = 1 this is (A^{11}, -A^{12}, ..., (-1)^{r-1}
// A^{1r})^T; always satisfies A_r x = det(A_r) e^j.
inline Vector alternatingTestVector(const Matrix& ar, int j = 1) {
    if (!ar.isSquare()) throw std::invalid_argument("square matrix required");
    const int r = static_cast<int>(ar.rows());
    if (j < 1 || j > r) throw std::out_of_range("column index out of range");
    Vector x(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        Rational c = detail::deletedMinor(ar, j, i);
        x[static_cast<std::size_t>(i) - 1] = ((i + j) % 2 == 0) ? c : Rational(-c);
    }
    return x;
}

} // namespace totalpos
