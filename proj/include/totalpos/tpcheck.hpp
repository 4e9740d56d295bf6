#pragma once

#include "totalpos/matcore.hpp"
#include "totalpos/signs.hpp"
#include "totalpos/verdict.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace totalpos {

namespace detail {

inline void validateOrder(const Matrix& a, int k) {
    const auto minDim = std::min(a.rows(), a.cols());
    if (k < 1 || static_cast<std::size_t>(k) > minDim)
        throw std::invalid_argument("order k out of range");
}

// Enumerates all size-r subsets of [1..n] in lexicographic order.
template <typename Fn>
bool forEachSubset(int n, int r, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        if (!fn(idx)) return false;
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (r - 1 - pos)) --pos;
        if (pos < 0) return true;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

// Visits every r x r submatrix (all index-set pairs, lexicographic) for
// r = 1..k; stops at the first visitor returning false.
template <typename Fn>
bool forEachSubmatrix(const Matrix& a, int k, Fn&& fn) {
    for (int r = 1; r <= k; ++r) {
        bool keepGoing = forEachSubset(static_cast<int>(a.rows()), r, [&](const std::vector<int>& rows) {
            return forEachSubset(static_cast<int>(a.cols()), r, [&](const std::vector<int>& cols) {
                return fn(rows, cols);
            });
        });
        if (!keepGoing) return false;
    }
    return true;
}

} // namespace detail

// TP_k by the definition: every minor of order at most k is positive.
inline Verdict isTPkAllMinors(const Matrix& a, int k) {
    detail::validateOrder(a, k);
    Verdict out = passVerdict(k);
    detail::forEachSubmatrix(a, k, [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        Rational v = minor(a, rows, cols);
        if (v > 0) return true;
        out = failVerdict(k, {.kind = CertificateKind::ViolatingMinor,
                              .rowIdx = rows,
                              .colIdx = cols,
                              .value = std::move(v),
                              .strictMode = true,
                              .note = "non-positive minor"});
        return false;
    });
    return out;
}

// TN_k by the definition: every minor of order at most k is non-negative.
inline Verdict isTNkAllMinors(const Matrix& a, int k) {
    detail::validateOrder(a, k);
    Verdict out = passVerdict(k);
    detail::forEachSubmatrix(a, k, [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        Rational v = minor(a, rows, cols);
        if (v >= 0) return true;
        out = failVerdict(k, {.kind = CertificateKind::ViolatingMinor,
                              .rowIdx = rows,
                              .colIdx = cols,
                              .value = std::move(v),
                              .strictMode = false,
                              .note = "negative minor"});
        return false;
    });
    return out;
}

// Fekete--Schoenberg route: positivity of the contiguous minors of order at
// most k already forces TP_k.
inline Verdict isTPkContiguous(const Matrix& a, int k) {
    detail::validateOrder(a, k);
    for (int r = 1; r <= k; ++r)
        for (const auto& w : contiguousWindows(a, r)) {
            Rational v = determinant(windowMatrix(a, w));
            if (v <= 0)
                return failVerdict(k, {.kind = CertificateKind::ViolatingMinor,
                                       .rowIdx = w.rowSet(),
                                       .colIdx = w.colSet(),
                                       .value = std::move(v),
                                       .strictMode = true,
                                       .note = "non-positive contiguous minor"});
        }
    return passVerdict(k);
}

// Sign non-reversal of A_r at x: strict wants some i with x_i (A_r x)_i > 0,
// the non-strict form wants some i with x_i != 0 and x_i (A_r x)_i >= 0.
inline bool signNonReversal(const Matrix& ar, const Vector& x, bool strict) {
    if (!ar.isSquare() || x.size() != ar.rows())
        throw std::invalid_argument("square matrix matching the vector required");
    if (isZeroVector(x)) throw std::invalid_argument("sign non-reversal undefined for zero vector");
    const Vector ax = matVec(ar, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational prod = x[i] * ax[i];
        if (strict ? prod > 0 : (x[i] != 0 && prod >= 0)) return true;
    }
    return false;
}

namespace detail {

// The scan order (increasing r, short-circuit on first violation) guarantees
// the single test vector is nonzero by the time a window is reached; if it
// ever were zero, A^{11} of the window is a zero proper minor and certifies
// the failure directly.
inline Certificate zeroTestVectorCertificate(const IndexWindow& w) {
    IndexWindow inner{w.rowStart + 1, w.colStart + 1, w.size - 1};
    return {.kind = CertificateKind::ViolatingMinor,
            .rowIdx = inner.rowSet(),
            .colIdx = inner.colSet(),
            .value = 0,
            .strictMode = true,
            .note = "zero proper minor (A^{11} of the window)"};
}

} // namespace detail

// Single-vector sign non-reversal route: TP_k holds iff every contiguous
// window reverses no sign of the first adjugate column.
inline Verdict isTPkSnrSingle(const Matrix& a, int k) {
    detail::validateOrder(a, k);
    for (int r = 1; r <= k; ++r)
        for (const auto& w : contiguousWindows(a, r)) {
            const Matrix ar = windowMatrix(a, w);
            const Vector x = alternatingTestVector(ar, 1);
            if (isZeroVector(x)) return failVerdict(k, detail::zeroTestVectorCertificate(w));
            if (!signNonReversal(ar, x, /*strict=*/true))
                return failVerdict(k, {.kind = CertificateKind::SignReversedVector,
                                       .rowIdx = w.rowSet(),
                                       .colIdx = w.colSet(),
                                       .witness = x,
                                       .strictMode = true,
                                       .note = "strict sign non-reversal fails"});
        }
    return passVerdict(k);
}

// Per-size alternating test vector alpha(r) in alt(r); defaults to
// bd_r = (1, -1, 1, ...).
using AlternatingProvider = std::function<Vector(int)>;

inline Vector defaultAlternating(int r) {
    Vector v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return v;
}

namespace detail {

inline Vector alternatingFor(const AlternatingProvider& provider, int r) {
    Vector alpha = provider ? provider(r) : defaultAlternating(r);
    if (alpha.size() != static_cast<std::size_t>(r) || !isAlternating(alpha))
        throw std::invalid_argument("alpha not alternating");
    return alpha;
}

} // namespace detail

// Single-vector non-strict sign non-reversal over ALL square submatrices of
// order at most k; equivalent to TN_k. A zero test vector (adjugate of rank
// deficiency >= 2) is a vacuous pass.
inline Verdict isTNkSnrSingle(const Matrix& a, int k,
                              const AlternatingProvider& alpha = {}) {
    detail::validateOrder(a, k);
    Verdict out = passVerdict(k);
    for (int r = 1; r <= k && out.holds; ++r) {
        const Vector alphaR = detail::alternatingFor(alpha, r);
        detail::forEachSubset(static_cast<int>(a.rows()), r, [&](const std::vector<int>& rows) {
            return detail::forEachSubset(static_cast<int>(a.cols()), r, [&](const std::vector<int>& cols) {
                const Matrix ar = a.submatrix(rows, cols);
                const Vector z = matVec(adjugate(ar), alphaR);
                if (isZeroVector(z)) return true;
                if (signNonReversal(ar, z, /*strict=*/false)) return true;
                out = failVerdict(k, {.kind = CertificateKind::SignReversedVector,
                                      .rowIdx = rows,
                                      .colIdx = cols,
                                      .witness = z,
                                      .strictMode = false,
                                      .note = "non-strict sign non-reversal fails"});
                return false;
            });
        });
    }
    return out;
}

enum class VdMode { TP, TN };

// Variation diminution at a single vector. TP mode: S^+(Ax) <= S^-(x), and on
// equality the forced boundary signs of Ax must match the boundary nonzero
// signs of x. TN mode: the same with S^-(Ax) and the nonzero components of Ax.
inline bool variationDiminutionCheck(const Matrix& ar, const Vector& x, VdMode mode) {
    if (x.size() != ar.cols()) throw std::invalid_argument("vector size mismatch");
    if (isZeroVector(x))
        throw std::invalid_argument("variation diminution undefined for zero vector");
    const Vector ax = matVec(ar, x);
    const int sMinusX = signChangesMinus(x);

    auto firstNonzeroSign = [](const Vector& v) {
        for (const auto& e : v)
            if (e != 0) return sgn(e);
        return 0;
    };
    auto lastNonzeroSign = [](const Vector& v) {
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            if (*it != 0) return sgn(*it);
        return 0;
    };

    if (mode == VdMode::TP) {
        const int sPlusAx = signChangesPlus(ax);
        if (sPlusAx < sMinusX) return true;
        if (sPlusAx > sMinusX) return false;
        // The boundary clause applies only when Ax != 0. For square A_r
        // equality already forces that (S^+(0) = r exceeds any S^-); a wide
        // matrix can reach equality with Ax = 0, which passes.
        if (isZeroVector(ax)) return true;
        const BoundarySigns forced = forcedBoundarySigns(ax);
        return forced.first == std::vector<int>{firstNonzeroSign(x)} &&
               forced.last == std::vector<int>{lastNonzeroSign(x)};
    }

    const int sMinusAx = signChangesMinus(ax);
    if (sMinusAx < sMinusX) return true;
    if (sMinusAx > sMinusX) return false;
    if (isZeroVector(ax)) return true; // no boundary clause when Ax = 0
    return firstNonzeroSign(ax) == firstNonzeroSign(x) &&
           lastNonzeroSign(ax) == lastNonzeroSign(x);
}

// Single-vector variation diminution over all contiguous windows of every
// size; equivalent to A totally positive (full order).
inline Verdict isTPVdSingle(const Matrix& a) {
    const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
    for (int r = 1; r <= kFull; ++r)
        for (const auto& w : contiguousWindows(a, r)) {
            const Matrix ar = windowMatrix(a, w);
            const Vector x = alternatingTestVector(ar, 1);
            if (isZeroVector(x)) return failVerdict(kFull, detail::zeroTestVectorCertificate(w));
            if (!variationDiminutionCheck(ar, x, VdMode::TP))
                return failVerdict(kFull, {.kind = CertificateKind::VdViolation,
                                           .rowIdx = w.rowSet(),
                                           .colIdx = w.colSet(),
                                           .witness = x,
                                           .strictMode = true,
                                           .note = "variation diminution (TP) fails"});
        }
    return passVerdict(kFull);
}

// TN analogue over all square submatrices of every size; zero test vectors
// pass vacuously.
inline Verdict isTNVdSingle(const Matrix& a, const AlternatingProvider& alpha = {}) {
    const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
    Verdict out = passVerdict(kFull);
    for (int r = 1; r <= kFull && out.holds; ++r) {
        const Vector alphaR = detail::alternatingFor(alpha, r);
        detail::forEachSubset(static_cast<int>(a.rows()), r, [&](const std::vector<int>& rows) {
            return detail::forEachSubset(static_cast<int>(a.cols()), r, [&](const std::vector<int>& cols) {
                const Matrix ar = a.submatrix(rows, cols);
                const Vector y = matVec(adjugate(ar), alphaR);
                if (isZeroVector(y)) return true;
                if (variationDiminutionCheck(ar, y, VdMode::TN)) return true;
                out = failVerdict(kFull, {.kind = CertificateKind::VdViolation,
                                          .rowIdx = rows,
                                          .colIdx = cols,
                                          .witness = y,
                                          .strictMode = false,
                                          .note = "variation diminution (TN) fails"});
                return false;
            });
        });
    }
    return out;
}

} // namespace totalpos
