#pragma once

#include "totalpos/linalg.hpp"
#include "totalpos/matcore.hpp"
#include "totalpos/tpcheck.hpp"
#include "totalpos/verdict.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace totalpos {

inline constexpr int kDefaultEnumerationCap = 16;

// LCP(q, A): find x >= 0 with y = Ax + q >= 0 and x^T y = 0.
struct LcpInstance {
    Matrix a;
    Vector q;

    LcpInstance(Matrix matrix, Vector offset) : a(std::move(matrix)), q(std::move(offset)) {
        if (!a.isSquare() || q.size() != a.rows())
            throw std::invalid_argument("LCP instance requires square A with matching q");
    }

    std::size_t size() const { return a.rows(); }
};

struct LcpSolution {
    Vector x;
    std::vector<int> support; // 1-based support of x
};

// The exact solution set, organized by complementary support. Isolated
// solutions are listed in `points`; supports whose feasible section is a
// segment or ray are reported in `infiniteSupports` without enumeration.
struct LcpSolutionSet {
    std::vector<LcpSolution> points;
    bool hasInfiniteFamily = false;
    std::vector<std::vector<int>> infiniteSupports;
};

enum class SolvabilityStatus { Empty, Unique, MultipleFinite, Infinite };

inline const char* statusName(SolvabilityStatus s) {
    switch (s) {
        case SolvabilityStatus::Empty: return "empty";
        case SolvabilityStatus::Unique: return "unique";
        case SolvabilityStatus::MultipleFinite: return "multipleFinite";
        case SolvabilityStatus::Infinite: return "infinite";
    }
    return "?";
}

inline SolvabilityStatus statusOf(const LcpSolutionSet& s) {
    if (s.hasInfiniteFamily) return SolvabilityStatus::Infinite;
    if (s.points.empty()) return SolvabilityStatus::Empty;
    return s.points.size() == 1 ? SolvabilityStatus::Unique : SolvabilityStatus::MultipleFinite;
}

// Exact check of the defining conditions; used by callers to re-verify
// anything the solver or a certificate claims.
inline bool isLcpSolution(const LcpInstance& inst, const Vector& x) {
    if (x.size() != inst.size()) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    Vector y = matVec(inst.a, x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += inst.q[i];
        if (y[i] < 0) return false;
    }
    return dot(x, y) == 0;
}

namespace detail {

inline void requireCap(std::size_t n, int cap) {
    // 30 is a hard technical bound (support masks); anything near it is
    // unusable anyway at 2^n linear solves.
    if (static_cast<int>(n) > cap || n > 30)
        throw std::invalid_argument("enumeration cap exceeded");
}

// The feasible section of one complementary support S, as a polyhedron over
// the nullspace coordinates t: x_S = particular + N t, x off S = 0, y on S
// = 0 by construction, x_S >= 0 and y off S >= 0 as constraints.
struct SupportSection {
    std::vector<int> support;            // 1-based
    Vector particular;                    // x_S(0)
    std::vector<Vector> nullBasis;        // columns of N
    std::vector<linalg::HalfSpace> constraints;

    Vector embed(const Vector& xs, std::size_t n) const {
        Vector x(n, Rational(0));
        for (std::size_t i = 0; i < support.size(); ++i)
            x[static_cast<std::size_t>(support[i]) - 1] = xs[i];
        return x;
    }

    Vector pointAt(const Vector& t, std::size_t n) const {
        Vector xs = particular;
        for (std::size_t d = 0; d < nullBasis.size(); ++d)
            for (std::size_t i = 0; i < xs.size(); ++i)
                xs[i] += nullBasis[d][i] * t[d];
        return embed(xs, n);
    }
};

inline std::optional<SupportSection> supportSection(const LcpInstance& inst, std::uint32_t mask) {
    const std::size_t n = inst.size();
    SupportSection sec;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sec.support.push_back(static_cast<int>(i) + 1);

    const std::size_t s = sec.support.size();
    if (s == 0) {
        sec.particular = {};
        return sec;
    }
    Matrix sub(s, s);
    Vector rhs(s);
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t gi = static_cast<std::size_t>(sec.support[i]) - 1;
        rhs[i] = -inst.q[gi];
        for (std::size_t j = 0; j < s; ++j)
            sub(i, j) = inst.a(gi, static_cast<std::size_t>(sec.support[j]) - 1);
    }
    auto sol = linalg::solveLinearSystem(sub, rhs);
    if (!sol.consistent) return std::nullopt;
    sec.particular = std::move(sol.particular);
    sec.nullBasis = std::move(sol.nullBasis);

    const std::size_t dim = sec.nullBasis.size();
    // x_S >= 0
    for (std::size_t i = 0; i < s; ++i) {
        linalg::HalfSpace h{Vector(dim), -sec.particular[i], false};
        for (std::size_t d = 0; d < dim; ++d) h.a[d] = sec.nullBasis[d][i];
        sec.constraints.push_back(std::move(h));
    }
    // y_i >= 0 off the support
    for (std::size_t gi = 0; gi < n; ++gi) {
        if (mask & (1u << gi)) continue;
        Rational base = inst.q[gi];
        for (std::size_t j = 0; j < s; ++j)
            base += inst.a(gi, static_cast<std::size_t>(sec.support[j]) - 1) * sec.particular[j];
        linalg::HalfSpace h{Vector(dim), -base, false};
        for (std::size_t d = 0; d < dim; ++d) {
            Rational coeff = 0;
            for (std::size_t j = 0; j < s; ++j)
                coeff += inst.a(gi, static_cast<std::size_t>(sec.support[j]) - 1) * sec.nullBasis[d][j];
            h.a[d] = std::move(coeff);
        }
        sec.constraints.push_back(std::move(h));
    }
    return sec;
}

inline void addPoint(LcpSolutionSet& out, Vector x) {
    for (const auto& p : out.points)
        if (p.x == x) return;
    std::vector<int> supp = supportOf(x);
    out.points.push_back({std::move(x), std::move(supp)});
}

} // namespace detail

// Exhaustive complementary-support enumeration: for every S subset of [n],
// solve A_SS x_S = -q_S exactly and keep the feasible outcomes. Uniqueness
// and pattern questions need the FULL solution set, which pivoting methods
// do not deliver; hence enumeration, capped at n <= cap.
inline LcpSolutionSet enumerateSolutions(const LcpInstance& inst, int cap = kDefaultEnumerationCap) {
    detail::requireCap(inst.size(), cap);
    const std::size_t n = inst.size();
    LcpSolutionSet out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto sec = detail::supportSection(inst, mask);
        if (!sec) continue;
        if (sec->support.empty()) {
            bool ok = true;
            for (const auto& qi : inst.q)
                if (qi < 0) { ok = false; break; }
            if (ok) detail::addPoint(out, Vector(n, Rational(0)));
            continue;
        }
        if (sec->nullBasis.empty()) {
            // unique candidate for this support; feasibility is a direct check
            Vector x = sec->embed(sec->particular, n);
            if (isLcpSolution(inst, x)) detail::addPoint(out, std::move(x));
            continue;
        }
        auto analysis = linalg::classifyPolyhedron(sec->constraints, sec->nullBasis.size());
        switch (analysis.cls) {
            case linalg::PolyClass::Empty: break;
            case linalg::PolyClass::Point:
                detail::addPoint(out, sec->pointAt(analysis.point, n));
                break;
            case linalg::PolyClass::Infinite:
                out.hasInfiniteFamily = true;
                if (std::find(out.infiniteSupports.begin(), out.infiniteSupports.end(), sec->support) ==
                    out.infiniteSupports.end())
                    out.infiniteSupports.push_back(sec->support);
                break;
        }
    }
    return out;
}

inline SolvabilityStatus solvabilityStatus(const LcpInstance& inst, int cap = kDefaultEnumerationCap) {
    return statusOf(enumerateSolutions(inst, cap));
}

// P-matrix test: all 2^n - 1 principal minors positive.
inline Verdict isPMatrix(const Matrix& a) {
    if (!a.isSquare()) throw std::invalid_argument("P-matrix test requires a square matrix");
    const int n = static_cast<int>(a.rows());
    Verdict out = passVerdict(n);
    for (int r = 1; r <= n && out.holds; ++r)
        detail::forEachSubset(n, r, [&](const std::vector<int>& idx) {
            Rational v = minor(a, idx, idx);
            if (v > 0) return true;
            out = failVerdict(n, {.kind = CertificateKind::ViolatingMinor,
                                  .rowIdx = idx,
                                  .colIdx = idx,
                                  .value = std::move(v),
                                  .strictMode = true,
                                  .note = "non-positive principal minor"});
            return false;
        });
    return out;
}

// Single-vector LCP characterization: A is TP_k iff for every contiguous
// window A_r (r <= k) the LCP at the constructed pair (x^{A_r}, q^{A_r}) has
// exactly {x^{A_r}} as its solution set.
inline Verdict isTPkLcpSingle(const Matrix& a, int k, int cap = kDefaultEnumerationCap) {
    detail::validateOrder(a, k);
    for (int r = 1; r <= k; ++r) {
        detail::requireCap(static_cast<std::size_t>(r), cap);
        for (const auto& w : contiguousWindows(a, r)) {
            const Matrix ar = windowMatrix(a, w);
            auto [x, q] = lcpTestVector(ar);
            const LcpInstance inst{ar, q};
            const auto sols = enumerateSolutions(inst, cap);
            const bool unique =
                !sols.hasInfiniteFamily && sols.points.size() == 1 && sols.points[0].x == x;
            if (unique) continue;

            Certificate cert{.kind = CertificateKind::LcpWitness,
                             .rowIdx = w.rowSet(),
                             .colIdx = w.colSet(),
                             .witness = x,
                             .qVec = q,
                             .strictMode = true};
            for (const auto& p : sols.points)
                if (p.x != x) { cert.witnessSecond = p.x; break; }
            if (!cert.witnessSecond.empty())
                cert.note = "second solution besides the test vector";
            else if (sols.hasInfiniteFamily)
                cert.note = "infinite solution family";
            else if (sols.points.empty())
                cert.note = "no solution at the test pair";
            else
                cert.note = "test vector is the unexpected unique solution";
            return failVerdict(k, std::move(cert));
        }
    }
    return passVerdict(k);
}

namespace detail {

// Is there a solution strictly positive exactly on the odd (parity = 1) or
// even (parity = 0) positions? Such a vector can only arise from its own
// complementary support, so one section suffices.
inline bool patternSolutionPresent(const LcpInstance& inst, int parity, int cap) {
    requireCap(inst.size(), cap);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (static_cast<int>(i) % 2 == (parity == 1 ? 0 : 1)) mask |= (1u << i);
    auto sec = supportSection(inst, mask);
    if (!sec) return false;
    if (sec->nullBasis.empty()) {
        Vector x = sec->embed(sec->particular, inst.size());
        if (!isLcpSolution(inst, x)) return false;
        for (int idx : sec->support)
            if (x[static_cast<std::size_t>(idx) - 1] == 0) return false;
        return true;
    }
    auto constraints = sec->constraints;
    // strengthen x_S >= 0 to x_S > 0 (the first |S| constraints)
    for (std::size_t i = 0; i < sec->support.size(); ++i) constraints[i].strict = true;
    return linalg::feasiblePoint(std::move(constraints), sec->nullBasis.size()).has_value();
}

} // namespace detail

// Pattern-pair primitive: false iff Sol(q, A_r) simultaneously contains a
// vector with pattern (+,0,+,0,...) and one with pattern (0,+,0,+,...).
inline bool signPatternPairAbsent(const Matrix& ar, const Vector& q, int cap = kDefaultEnumerationCap) {
    if (!ar.isSquare() || q.size() != ar.rows())
        throw std::invalid_argument("square matrix matching q required");
    if (ar.rows() < 2) throw std::invalid_argument("pattern test needs size >= 2");
    for (const auto& qi : q)
        if (qi >= 0) throw std::invalid_argument("q must be strictly negative");
    const LcpInstance inst{ar, q};
    return !(detail::patternSolutionPresent(inst, 1, cap) &&
             detail::patternSolutionPresent(inst, 0, cap));
}

// Sampling falsifier for the all-q uniqueness property: draws strictly
// negative q per contiguous window; a true verdict means "no counterexample
// found", not a proof.
inline Verdict isTPkLcpSampled(const Matrix& a, int k, int samples, std::uint64_t seed,
                               int cap = kDefaultEnumerationCap) {
    detail::validateOrder(a, k);
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    SeededRng rng(seed);
    for (int r = 1; r <= k; ++r) {
        detail::requireCap(static_cast<std::size_t>(r), cap);
        for (const auto& w : contiguousWindows(a, r)) {
            const Matrix ar = windowMatrix(a, w);
            for (int s = 0; s < samples; ++s) {
                Vector q(static_cast<std::size_t>(r));
                for (auto& qi : q)
                    qi = -makeRational(rng.nextInt(1, 20), rng.nextInt(1, 20));
                const LcpInstance inst{ar, q};
                const auto sols = enumerateSolutions(inst, cap);
                if (statusOf(sols) == SolvabilityStatus::Unique) continue;
                Certificate cert{.kind = CertificateKind::LcpWitness,
                                 .rowIdx = w.rowSet(),
                                 .colIdx = w.colSet(),
                                 .qVec = q,
                                 .strictMode = true,
                                 .note = std::string("sampled q gives status ") +
                                         statusName(statusOf(sols))};
                if (!sols.points.empty()) cert.witness = sols.points[0].x;
                if (sols.points.size() > 1) cert.witnessSecond = sols.points[1].x;
                return failVerdict(k, std::move(cert));
            }
        }
    }
    return passVerdict(k);
}

namespace detail {

// Images A x over the full solution set of one instance. Returns nullopt if
// some infinite family has a non-constant image (distinct images exist);
// otherwise the list of distinct images.
inline std::optional<std::vector<Vector>> collectSolutionImages(const LcpInstance& inst, int cap) {
    requireCap(inst.size(), cap);
    const std::size_t n = inst.size();
    std::vector<Vector> images;
    auto push = [&](Vector img) {
        if (std::find(images.begin(), images.end(), img) == images.end())
            images.push_back(std::move(img));
    };
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto sec = supportSection(inst, mask);
        if (!sec) continue;
        if (sec->support.empty()) {
            bool ok = true;
            for (const auto& qi : inst.q)
                if (qi < 0) { ok = false; break; }
            if (ok) push(Vector(n, Rational(0)));
            continue;
        }
        if (sec->nullBasis.empty()) {
            Vector x = sec->embed(sec->particular, n);
            if (isLcpSolution(inst, x)) push(matVec(inst.a, x));
            continue;
        }
        const std::size_t dim = sec->nullBasis.size();
        auto analysis = linalg::classifyPolyhedron(sec->constraints, dim);
        if (analysis.cls == linalg::PolyClass::Empty) continue;
        if (analysis.cls == linalg::PolyClass::Point) {
            push(matVec(inst.a, sec->pointAt(analysis.point, n)));
            continue;
        }
        // Infinite family: the image is constant iff (A_{.,S} N) kills every
        // direction of the affine hull, computed via implicit equalities.
        const auto eqIdx = linalg::implicitEqualities(sec->constraints, dim);
        std::vector<Vector> eqRows;
        for (auto i : eqIdx) eqRows.push_back(sec->constraints[i].a);
        const auto dirs = linalg::kernelBasis(eqRows, dim);
        for (const auto& v : dirs) {
            // image shift = A_{.,S} (N v)
            Vector shiftS(sec->support.size(), Rational(0));
            for (std::size_t d = 0; d < dim; ++d)
                for (std::size_t i = 0; i < shiftS.size(); ++i)
                    shiftS[i] += sec->nullBasis[d][i] * v[d];
            const Vector shift = matVec(inst.a, sec->embed(shiftS, n));
            if (!isZeroVector(shift)) return std::nullopt;
        }
        push(matVec(inst.a, sec->pointAt(analysis.point, n)));
    }
    return images;
}

} // namespace detail

// Equal-image sufficiency route: if, over every square submatrix A_r of size
// at most k, any two solutions of LCP(q^{A_r}, A_r) have the same image
// under A_r, then A is TN_k. Sufficient only; TN matrices exist for which
// the converse fails (see the zero-row example in the tests).
inline Verdict tnSufficientSingle(const Matrix& a, int k, int cap = kDefaultEnumerationCap) {
    detail::validateOrder(a, k);
    Verdict out = passVerdict(k);
    for (int r = 1; r <= k && out.holds; ++r) {
        detail::requireCap(static_cast<std::size_t>(r), cap);
        detail::forEachSubset(static_cast<int>(a.rows()), r, [&](const std::vector<int>& rows) {
            return detail::forEachSubset(static_cast<int>(a.cols()), r, [&](const std::vector<int>& cols) {
                const Matrix ar = a.submatrix(rows, cols);
                auto [x, q] = lcpTestVector(ar);
                const auto images = detail::collectSolutionImages(LcpInstance{ar, q}, cap);
                if (images && images->size() <= 1) return true;
                Certificate cert{.kind = CertificateKind::LcpWitness,
                                 .rowIdx = rows,
                                 .colIdx = cols,
                                 .witness = x,
                                 .qVec = q,
                                 .strictMode = false,
                                 .note = images ? "solutions with distinct images"
                                                : "infinite family with non-constant image"};
                out = failVerdict(k, std::move(cert));
                return false;
            });
        });
    }
    return out;
}

// Nondegeneracy of q with respect to A: every solution x has x_i != y_i for
// all i. Infinite families are checked parametrically.
inline bool isNondegenerateVector(const LcpInstance& inst, int cap = kDefaultEnumerationCap) {
    detail::requireCap(inst.size(), cap);
    const std::size_t n = inst.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto sec = detail::supportSection(inst, mask);
        if (!sec) continue;
        if (sec->support.empty()) {
            bool feasible = true;
            for (const auto& qi : inst.q)
                if (qi < 0) { feasible = false; break; }
            if (feasible) {
                // x = 0: degenerate iff some q_i = 0
                for (const auto& qi : inst.q)
                    if (qi == 0) return false;
            }
            continue;
        }
        const std::size_t dim = sec->nullBasis.size();
        if (dim == 0) {
            const Vector x = sec->embed(sec->particular, n);
            if (!isLcpSolution(inst, x)) continue;
            Vector y = matVec(inst.a, x);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] == y[i] + inst.q[i]) return false;
            continue;
        }
        if (!linalg::feasiblePoint(sec->constraints, dim)) continue;
        // Some member has x_i = y_i iff the section meets one hyperplane
        // x_i(t) = 0 (i in S, where y_i = 0) or y_i(t) = 0 (i off S).
        for (std::size_t ci = 0; ci < sec->constraints.size(); ++ci) {
            auto probe = sec->constraints;
            linalg::HalfSpace flipped = probe[ci];
            for (auto& v : flipped.a) v = -v;
            flipped.b = -flipped.b;
            probe.push_back(std::move(flipped)); // pins constraint ci to equality
            if (linalg::feasiblePoint(std::move(probe), dim)) return false;
        }
    }
    return true;
}

// Column-basis hypothesis: every column subset that is a basis of the column
// space has an invertible principal submatrix. For TN matrices this forces
// all solutions of any solvable LCP to share one image (a property test).
inline bool columnBasisHypothesis(const Matrix& a, int cap = kDefaultEnumerationCap) {
    if (!a.isSquare()) throw std::invalid_argument("square matrix required");
    detail::requireCap(a.rows(), cap);
    const int n = static_cast<int>(a.rows());
    const std::size_t rk = linalg::rank(a);
    if (rk == 0) return true; // no nonempty independent column set
    bool ok = true;
    detail::forEachSubset(n, static_cast<int>(rk), [&](const std::vector<int>& cols) {
        std::vector<int> allRows(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) allRows[static_cast<std::size_t>(i)] = i + 1;
        if (linalg::rank(a.submatrix(allRows, cols)) != rk) return true; // not a basis
        if (minor(a, cols, cols) == 0) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// One-pass preprocessing for TP/TN instances: indices with q_i >= 0 are
// deleted; a reduced solution lifts by zero-padding, and the caller
// re-verifies feasibility for the original instance.
struct ReducedLcp {
    std::optional<LcpInstance> instance; // nullopt when every index was removed
    std::vector<int> keptIndices;        // 1-based, ascending
    std::size_t originalSize = 0;
};

inline ReducedLcp reduceNonnegativeQ(const LcpInstance& inst) {
    ReducedLcp out;
    out.originalSize = inst.size();
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (inst.q[i] < 0) out.keptIndices.push_back(static_cast<int>(i) + 1);
    if (out.keptIndices.empty()) return out;
    Vector q2(out.keptIndices.size());
    for (std::size_t i = 0; i < out.keptIndices.size(); ++i)
        q2[i] = inst.q[static_cast<std::size_t>(out.keptIndices[i]) - 1];
    out.instance.emplace(inst.a.submatrix(out.keptIndices, out.keptIndices), std::move(q2));
    return out;
}

inline Vector liftReducedSolution(const ReducedLcp& reduced, const Vector& xReduced) {
    if (xReduced.size() != reduced.keptIndices.size())
        throw std::invalid_argument("reduced solution size mismatch");
    Vector x(reduced.originalSize, Rational(0));
    for (std::size_t i = 0; i < xReduced.size(); ++i)
        x[static_cast<std::size_t>(reduced.keptIndices[i]) - 1] = xReduced[i];
    return x;
}

} // namespace totalpos
