#pragma once

#include "totalpos/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace totalpos::linalg {

// Row-reduces `m` (a list of equal-length rational rows) in place to reduced
// row echelon form; returns the pivot column indices.
inline std::vector<std::size_t> rref(std::vector<Vector>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational lead = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const Matrix& a) {
    std::vector<Vector> rows(a.rows(), Vector(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    return rref(rows).size();
}

struct AffineSolution {
    bool consistent = false;
    Vector particular;              // one solution of A x = b
    std::vector<Vector> nullBasis;  // basis of ker A
};

// Exact general solve of A x = b: particular solution plus nullspace basis.
inline AffineSolution solveLinearSystem(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("system size mismatch");
    const std::size_t n = a.cols();
    std::vector<Vector> aug(a.rows(), Vector(n + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
        aug[i][n] = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return {}; // 0 = nonzero row

    AffineSolution out;
    out.consistent = true;
    out.particular.assign(n, Rational(0));
    std::vector<bool> isPivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        isPivot[pivots[r]] = true;
        out.particular[pivots[r]] = aug[r][n];
    }
    for (std::size_t freeCol = 0; freeCol < n; ++freeCol) {
        if (isPivot[freeCol]) continue;
        Vector dir(n, Rational(0));
        dir[freeCol] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            dir[pivots[r]] = -aug[r][freeCol];
        out.nullBasis.push_back(std::move(dir));
    }
    return out;
}

// Half-space a . t >= b (weak) or a . t > b (strict) over d variables.
struct HalfSpace {
    Vector a;
    Rational b;
    bool strict = false;
};

namespace fme {

// Drops tautologies, normalizes, returns false on a visibly infeasible
// constant constraint.
inline bool simplify(std::vector<HalfSpace>& cs) {
    std::vector<HalfSpace> kept;
    for (auto& c : cs) {
        if (isZeroVector(c.a)) {
            if (c.b > 0 || (c.strict && c.b == 0)) return false;
            continue;
        }
        // scale so the first nonzero coefficient has absolute value 1
        Rational scale;
        for (const auto& v : c.a)
            if (v != 0) { scale = abs(v); break; }
        for (auto& v : c.a) v /= scale;
        c.b /= scale;
        kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(), [](const HalfSpace& x, const HalfSpace& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b > y.b; // keep the tightest first
        return x.strict && !y.strict;
    });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const HalfSpace& x, const HalfSpace& y) { return x.a == y.a && x.b == y.b && x.strict == y.strict; }),
               kept.end());
    cs = std::move(kept);
    return true;
}

} // namespace fme

// Fourier--Motzkin feasibility over exact rationals with strict-inequality
// tracking. Returns a feasible point, or nullopt.
inline std::optional<Vector> feasiblePoint(std::vector<HalfSpace> cs, std::size_t dim) {
    if (!fme::simplify(cs)) return std::nullopt;
    if (dim == 0) return Vector{};

    const std::size_t j = dim - 1; // eliminate the last variable
    std::vector<HalfSpace> lowers, uppers, rest;
    for (auto& c : cs) {
        if (c.a[j] > 0) lowers.push_back(std::move(c));
        else if (c.a[j] < 0) uppers.push_back(std::move(c));
        else rest.push_back(std::move(c));
    }

    std::vector<HalfSpace> reduced;
    auto dropLast = [](const HalfSpace& c) {
        HalfSpace out{Vector(c.a.begin(), c.a.end() - 1), c.b, c.strict};
        return out;
    };
    for (const auto& c : rest) reduced.push_back(dropLast(c));
    for (const auto& lo : lowers)
        for (const auto& up : uppers) {
            // |up_j| * lo + lo_j * up eliminates t_j
            const Rational w1 = -up.a[j]; // > 0
            const Rational w2 = lo.a[j];  // > 0
            HalfSpace c{Vector(j), w1 * lo.b + w2 * up.b, lo.strict || up.strict};
            for (std::size_t t = 0; t < j; ++t) c.a[t] = w1 * lo.a[t] + w2 * up.a[t];
            reduced.push_back(std::move(c));
        }

    auto sub = feasiblePoint(std::move(reduced), j);
    if (!sub) return std::nullopt;

    // Back-substitute: bound t_j by the lower/upper families at *sub.
    bool haveLo = false, haveUp = false, loStrict = false, upStrict = false;
    Rational lo, up;
    auto boundAt = [&](const HalfSpace& c) {
        Rational acc = c.b;
        for (std::size_t t = 0; t < j; ++t) acc -= c.a[t] * (*sub)[t];
        return acc / c.a[j];
    };
    for (const auto& c : lowers) {
        const Rational v = boundAt(c);
        if (!haveLo || v > lo || (v == lo && c.strict)) { lo = v; loStrict = c.strict; }
        haveLo = true;
    }
    for (const auto& c : uppers) {
        const Rational v = boundAt(c);
        if (!haveUp || v < up || (v == up && c.strict)) { up = v; upStrict = c.strict; }
        haveUp = true;
    }

    Rational tj = 0;
    if (haveLo && haveUp) {
        if (lo == up) tj = lo; // both weak, by FME consistency
        else tj = (lo + up) / 2;
    } else if (haveLo) {
        tj = loStrict ? Rational(lo + 1) : lo;
    } else if (haveUp) {
        tj = upStrict ? Rational(up - 1) : up;
    }
    sub->push_back(std::move(tj));
    return sub;
}

enum class PolyClass { Empty, Point, Infinite };

struct PolyAnalysis {
    PolyClass cls = PolyClass::Empty;
    Vector point; // a feasible point when cls != Empty
};

// Classifies {t : constraints} as empty, a single point, or infinite. A
// feasible point moves iff the cone of its tight constraints is nontrivial,
// which reduces to 2*dim smaller feasibility checks.
inline PolyAnalysis classifyPolyhedron(const std::vector<HalfSpace>& cs, std::size_t dim) {
    auto pt = feasiblePoint(cs, dim);
    if (!pt) return {};
    if (dim == 0) return {PolyClass::Point, *pt};

    std::vector<const HalfSpace*> tight;
    for (const auto& c : cs) {
        Rational acc = -c.b;
        for (std::size_t t = 0; t < dim; ++t) acc += c.a[t] * (*pt)[t];
        if (acc == 0) tight.push_back(&c); // strict constraints are never tight
    }
    if (tight.empty()) return {PolyClass::Infinite, *pt};

    for (std::size_t j = 0; j < dim; ++j)
        for (int sigma : {+1, -1}) {
            // substitute v_j = sigma into {a_i . v >= 0 : i tight}
            std::vector<HalfSpace> cone;
            cone.reserve(tight.size());
            for (const auto* c : tight) {
                HalfSpace h{Vector(dim - 1), Rational(-sigma) * c->a[j], false};
                std::size_t out = 0;
                for (std::size_t t = 0; t < dim; ++t)
                    if (t != j) h.a[out++] = c->a[t];
                cone.push_back(std::move(h));
            }
            if (feasiblePoint(std::move(cone), dim - 1)) return {PolyClass::Infinite, *pt};
        }
    return {PolyClass::Point, *pt};
}

// Indices of constraints satisfied with equality by EVERY point of the
// (nonempty) polyhedron; the direction space of the affine hull is the
// kernel of these rows.
inline std::vector<std::size_t> implicitEqualities(const std::vector<HalfSpace>& cs, std::size_t dim) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].strict) continue;
        std::vector<HalfSpace> probe = cs;
        probe[i].strict = true;
        if (!feasiblePoint(std::move(probe), dim)) out.push_back(i);
    }
    return out;
}

// Basis of {v : rows . v = 0}.
inline std::vector<Vector> kernelBasis(const std::vector<Vector>& rows, std::size_t dim) {
    if (rows.empty()) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim, Rational(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Matrix m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    return solveLinearSystem(m, Vector(rows.size(), Rational(0))).nullBasis;
}

} // namespace totalpos::linalg
