// Test-only oracles, independent of the library's implementation paths: the
// determinant here is naive cofactor expansion, S^+ is exhaustive over the
// 2^#zeros assignments, and LCP solutions are re-verified with a separate
// matrix-vector product.
#pragma once

#include "totalpos/lcp.hpp"
#include "totalpos/matrix.hpp"
#include "totalpos/signs.hpp"
#include "totalpos/tpcheck.hpp"
#include "totalpos/verdict.hpp"

#include <algorithm>
#include <vector>

namespace oracles {

using totalpos::Matrix;
using totalpos::Rational;
using totalpos::Vector;

// Cofactor-expansion determinant; fine up to ~6x6.
inline Rational cofactorDet(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        Matrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = a(i, c);
            }
        }
        const Rational term = a(0, j) * cofactorDet(sub);
        det += (j % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

// Exhaustive S^+: maximum sign changes over every +-1 assignment to zeros;
// the all-zero vector keeps its S^+(0) = n convention.
inline int sPlusExhaustive(const Vector& x) {
    const std::size_t n = x.size();
    if (totalpos::isZeroVector(x)) return static_cast<int>(n);
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] == 0) zeros.push_back(i);
    int best = -1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << zeros.size()); ++mask) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = totalpos::sgn(x[i]);
        for (std::size_t z = 0; z < zeros.size(); ++z)
            s[zeros[z]] = (mask >> z) & 1 ? 1 : -1;
        int changes = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (s[i] != s[i - 1]) ++changes;
        best = std::max(best, changes);
    }
    return best;
}

struct BoundaryOracle {
    std::vector<int> first, last;
};

inline BoundaryOracle boundarySignsExhaustive(const Vector& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] == 0) zeros.push_back(i);
    const int target = sPlusExhaustive(x);
    bool firstSeen[2] = {false, false}, lastSeen[2] = {false, false};
    for (std::size_t mask = 0; mask < (std::size_t{1} << zeros.size()); ++mask) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = totalpos::sgn(x[i]);
        for (std::size_t z = 0; z < zeros.size(); ++z)
            s[zeros[z]] = (mask >> z) & 1 ? 1 : -1;
        int changes = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (s[i] != s[i - 1]) ++changes;
        if (changes != target) continue;
        firstSeen[s.front() == 1] = true;
        lastSeen[s.back() == 1] = true;
    }
    BoundaryOracle out;
    if (firstSeen[0]) out.first.push_back(-1);
    if (firstSeen[1]) out.first.push_back(+1);
    if (lastSeen[0]) out.last.push_back(-1);
    if (lastSeen[1]) out.last.push_back(+1);
    return out;
}

// Independent matrix-vector product for replaying LCP claims.
inline Vector applyMatrix(const Matrix& a, const Vector& x) {
    Vector y(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline bool solvesLcp(const Matrix& a, const Vector& q, const Vector& x) {
    for (const auto& v : x)
        if (v < 0) return false;
    Vector y = applyMatrix(a, x);
    Rational comp = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += q[i];
        if (y[i] < 0) return false;
        comp += x[i] * y[i];
    }
    return comp == 0;
}

// Definition-level TP/TN via the cofactor oracle.
inline bool allMinorsSatisfy(const Matrix& a, int k, bool strict) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    for (int r = 1; r <= k; ++r) {
        std::vector<int> ri(static_cast<std::size_t>(r)), ci(static_cast<std::size_t>(r));
        auto nextCombo = [](std::vector<int>& idx, int bound) {
            int pos = static_cast<int>(idx.size()) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   bound - (static_cast<int>(idx.size()) - 1 - pos))
                --pos;
            if (pos < 0) return false;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < idx.size(); ++i)
                idx[i] = idx[i - 1] + 1;
            return true;
        };
        for (int i = 0; i < r; ++i) ri[static_cast<std::size_t>(i)] = i + 1;
        do {
            for (int i = 0; i < r; ++i) ci[static_cast<std::size_t>(i)] = i + 1;
            do {
                const Rational d = cofactorDet(a.submatrix(ri, ci));
                if (strict ? d <= 0 : d < 0) return false;
            } while (nextCombo(ci, n));
        } while (nextCombo(ri, m));
    }
    return true;
}

// Certificate replay: a false verdict must reproduce its violation with
// primitive operations only.
inline bool replay(const Matrix& a, const totalpos::Certificate& c) {
    using totalpos::CertificateKind;
    switch (c.kind) {
        case CertificateKind::ViolatingMinor: {
            const Rational v = cofactorDet(a.submatrix(c.rowIdx, c.colIdx));
            if (v != c.value) return false;
            return c.strictMode ? v <= 0 : v < 0;
        }
        case CertificateKind::SignReversedVector: {
            const Matrix ar = a.submatrix(c.rowIdx, c.colIdx);
            const Vector ax = applyMatrix(ar, c.witness);
            for (std::size_t i = 0; i < c.witness.size(); ++i) {
                const Rational prod = c.witness[i] * ax[i];
                if (c.strictMode ? prod > 0 : (c.witness[i] != 0 && prod >= 0)) return false;
            }
            return !totalpos::isZeroVector(c.witness);
        }
        case CertificateKind::VdViolation: {
            const Matrix ar = a.submatrix(c.rowIdx, c.colIdx);
            return !totalpos::variationDiminutionCheck(
                ar, c.witness, c.strictMode ? totalpos::VdMode::TP : totalpos::VdMode::TN);
        }
        case CertificateKind::LcpWitness: {
            const Matrix ar = a.submatrix(c.rowIdx, c.colIdx);
            if (!c.witnessSecond.empty())
                return solvesLcp(ar, c.qVec, c.witnessSecond) && c.witnessSecond != c.witness;
            // no second point: the violation was an empty/infinite/mismatched
            // solution set; re-derive it
            const auto sols = totalpos::enumerateSolutions({ar, c.qVec});
            return totalpos::statusOf(sols) != totalpos::SolvabilityStatus::Unique ||
                   sols.points[0].x != c.witness;
        }
    }
    return false;
}

} // namespace oracles
