#pragma once

#include "totalpos/lcp.hpp"
#include "totalpos/matcore.hpp"
#include "totalpos/signs.hpp"
#include "totalpos/tpcheck.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace totalpos {

// Finite slice of a bi-infinite coefficient sequence. Windows touching
// outside the range are errors, not zero-extended: silent zero extension
// would change minors.
struct RationalSequence {
    int nMin = 0;
    int nMax = 0;
    std::vector<Rational> coeffs;

    RationalSequence(int lo, int hi, std::vector<Rational> c)
        : nMin(lo), nMax(hi), coeffs(std::move(c)) {
        if (hi < lo || coeffs.size() != static_cast<std::size_t>(hi - lo + 1))
            throw std::invalid_argument("sequence range/coefficient count mismatch");
    }

    const Rational& at(int n) const {
        if (n < nMin || n > nMax) throw std::out_of_range("sequence index out of range");
        return coeffs[static_cast<std::size_t>(n - nMin)];
    }
};

// The r x r Toeplitz window with (i, j) entry c_{l+i-j}.
inline Matrix toeplitzWindow(const RationalSequence& seq, int l, int r) {
    if (r < 1) throw std::invalid_argument("window size must be positive");
    Matrix w(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            w(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) = seq.at(l + i - j);
    return w;
}

// TP_k Polya frequency test over the finite window range: every (r, l)
// window must pass the single-vector LCP uniqueness test at its own size.
inline Verdict isPFkWindowed(const RationalSequence& seq, int k, int lMin, int lMax,
                             int cap = kDefaultEnumerationCap) {
    if (k < 1) throw std::invalid_argument("order k out of range");
    if (lMin > lMax) throw std::invalid_argument("empty l-range");
    for (int r = 1; r <= k; ++r)
        for (int l = lMin; l <= lMax; ++l) {
            const Matrix w = toeplitzWindow(seq, l, r);
            Verdict v = isTPkLcpSingle(w, r, cap);
            if (!v.holds) {
                Certificate cert = v.certificate ? *v.certificate : Certificate{};
                cert.pfWindow = std::make_pair(r, l);
                cert.note = "window r=" + std::to_string(r) + " l=" + std::to_string(l) +
                            (cert.note.empty() ? "" : ": " + cert.note);
                return failVerdict(k, std::move(cert));
            }
        }
    return passVerdict(k);
}

// Karlin's Polya frequency function power: (x e^{-x})^alpha for x > 0, 0
// otherwise.
inline double omegaAlpha(double x, double alpha) {
    if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
    if (!(x > 0)) return 0.0;
    return std::pow(x * std::exp(-x), alpha);
}

// Nodes y_1 < ... < y_n < x_1 < ... < x_n and the exponent for the
// counterexample family.
struct KarlinSpec {
    int n = 0;
    double alpha = 0;
    std::vector<double> y;
    std::vector<double> x;

    void validate() const {
        if (n < 1 || y.size() != static_cast<std::size_t>(n) || x.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("node count mismatch");
        for (int i = 1; i < n; ++i)
            if (!(y[static_cast<std::size_t>(i - 1)] < y[static_cast<std::size_t>(i)]) ||
                !(x[static_cast<std::size_t>(i - 1)] < x[static_cast<std::size_t>(i)]))
                throw std::invalid_argument("nodes must be strictly increasing");
        if (!(y.back() < x.front()))
            throw std::invalid_argument("node ordering y_n < x_1 violated");
    }
};

struct FloatMatrixWithMargin {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;
    // Smallest Hadamard-relative |contiguous minor| over every window size;
    // float verdicts are only trusted above a tolerance on this value.
    double certifiedMargin = 0;

    double at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

namespace detail {

inline double floatDet(std::vector<double> m, std::size_t n) {
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m[i * n + k]) > std::fabs(m[pivot * n + k])) pivot = i;
        if (m[pivot * n + k] == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
            det = -det;
        }
        det *= m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m[i * n + k] / m[k * n + k];
            for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
        }
    }
    return det;
}

inline double hadamardBound(const std::vector<double>& m, std::size_t n) {
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * m[i * n + j];
        prod *= std::sqrt(s);
    }
    return prod;
}

// Signed Hadamard-relative value of one contiguous window.
inline double windowRelativeMinor(const FloatMatrixWithMargin& fm, std::size_t i0, std::size_t j0,
                                  std::size_t r) {
    std::vector<double> w(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w[i * r + j] = fm.at(i0 + i, j0 + j);
    const double h = hadamardBound(w, r);
    if (h == 0.0) return 0.0;
    return floatDet(std::move(w), r) / h;
}

} // namespace detail

// The matrix (omega(x_i - y_j)^alpha); all entries strictly positive since
// y_n < x_1. certifiedMargin covers every contiguous window.
inline FloatMatrixWithMargin karlinMatrix(const KarlinSpec& spec) {
    spec.validate();
    const std::size_t n = static_cast<std::size_t>(spec.n);
    FloatMatrixWithMargin fm{n, n, std::vector<double>(n * n), 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            fm.entries[i * n + j] = omegaAlpha(spec.x[i] - spec.y[j], spec.alpha);
    double worst = 1.0;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t i = 0; i + r <= n; ++i)
            for (std::size_t j = 0; j + r <= n; ++j)
                worst = std::min(worst, std::fabs(detail::windowRelativeMinor(fm, i, j, r)));
    fm.certifiedMargin = worst;
    return fm;
}

namespace detail {

struct KarlinDefaults {
    double alpha;
    std::vector<double> y;
    std::vector<double> x;
};

// Tuned so the float pre-check margin clears 1e-9 with wide headroom; the
// naive uniform spacing collapses below double precision already at n = 5.
inline KarlinDefaults karlinDefaults(int n) {
    switch (n) {
        case 3: return {0.5673, {0.0, 2.5121, 2.6536}, {2.6736, 2.8398, 5.9963}};
        case 4:
            return {1.6799, {0.0, 1.8401, 2.0692, 2.1506}, {2.1706, 2.2597, 2.6240, 5.9917}};
        case 5:
            return {2.7549,
                    {0.0, 1.3171, 1.5917, 1.7500, 1.8134},
                    {1.8334, 1.9003, 2.1102, 2.7101, 5.9610}};
        default: {
            // decreasing y-gaps, small bridge, increasing x-gaps
            KarlinDefaults d{static_cast<double>(n) - 2.5, {0.0}, {}};
            double gap = 1.4;
            for (int j = 1; j < n; ++j) {
                gap *= 0.55;
                d.y.push_back(d.y.back() + gap);
            }
            double pos = d.y.back() + 0.02;
            gap = 0.07;
            for (int i = 0; i < n; ++i) {
                d.x.push_back(pos);
                gap *= 2.8;
                pos += gap;
            }
            return d;
        }
    }
}

} // namespace detail

// Default node layout, with seeded rational perturbation of the gaps
// (seed 0 = unperturbed).
inline KarlinSpec defaultKarlinSpec(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("counterexample construction needs n >= 3");
    auto d = detail::karlinDefaults(n);
    KarlinSpec spec{n, d.alpha, std::move(d.y), std::move(d.x)};
    if (seed != 0) {
        SeededRng rng(seed);
        auto jitter = [&]() { return 1.0 + static_cast<double>(rng.nextInt(-30, 30)) / 10000.0; };
        std::vector<double> gaps;
        for (int i = 1; i < n; ++i)
            gaps.push_back((spec.y[static_cast<std::size_t>(i)] - spec.y[static_cast<std::size_t>(i - 1)]) * jitter());
        double bridge = (spec.x[0] - spec.y.back()) * jitter();
        std::vector<double> xgaps;
        for (int i = 1; i < n; ++i)
            xgaps.push_back((spec.x[static_cast<std::size_t>(i)] - spec.x[static_cast<std::size_t>(i - 1)]) * jitter());
        for (int i = 1; i < n; ++i)
            spec.y[static_cast<std::size_t>(i)] = spec.y[static_cast<std::size_t>(i - 1)] + gaps[static_cast<std::size_t>(i - 1)];
        spec.x[0] = spec.y.back() + bridge;
        for (int i = 1; i < n; ++i)
            spec.x[static_cast<std::size_t>(i)] = spec.x[static_cast<std::size_t>(i - 1)] + xgaps[static_cast<std::size_t>(i - 1)];
    }
    spec.validate();
    return spec;
}

namespace detail {

inline Integer roundToInteger(const Rational& v) {
    // floor(v + 1/2), exact
    const Rational shifted = v + makeRational(1, 2);
    Integer q = numerator(shifted) / denominator(shifted);
    if (shifted < 0 && q * denominator(shifted) != numerator(shifted)) --q;
    return q;
}

// Nearest rational with about relDigits significant decimal digits;
// relDigits >= 17 falls back to the exact dyadic value of the double.
inline Rational rationalize(double v, int relDigits) {
    if (v == 0.0) return 0;
    if (relDigits >= 17) return Rational(v);
    const Rational exact(v);
    Rational mag = abs(exact);
    unsigned leadingZeros = 0;
    while (mag < 1) {
        mag *= 10;
        ++leadingZeros;
    }
    Integer den = pow10(leadingZeros + static_cast<unsigned>(relDigits) - 1);
    Integer num = roundToInteger(exact * Rational(den));
    return makeRational(std::move(num), std::move(den));
}

} // namespace detail

struct CounterexampleResult {
    Matrix matrix;      // exactly TP_{n-1} with det < 0, verified rationally
    double floatMargin; // pre-check margin of the accepted attempt
    int attempts;
};

inline constexpr double kFloatMarginTolerance = 1e-9;

// Builds an n x n rational matrix that is exactly TP_{n-1} with negative
// determinant. The float stage only selects a candidate; the returned matrix
// is verified with exact arithmetic, so no float trust ships with it.
inline CounterexampleResult tpCounterexample(int n, std::uint64_t seed = 0) {
    if (n < 3) throw std::invalid_argument("counterexample construction needs n >= 3");
    constexpr int kMaxAttempts = 8;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::uint64_t attemptSeed =
            attempt == 0 ? seed : seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(attempt));
        KarlinSpec spec = defaultKarlinSpec(n, attemptSeed);
        const FloatMatrixWithMargin fm = karlinMatrix(spec);
        if (fm.certifiedMargin <= kFloatMarginTolerance) continue;

        bool signsOk = true;
        for (std::size_t r = 1; r <= fm.rows && signsOk; ++r)
            for (std::size_t i = 0; i + r <= fm.rows && signsOk; ++i)
                for (std::size_t j = 0; j + r <= fm.cols && signsOk; ++j) {
                    const double rel = detail::windowRelativeMinor(fm, i, j, r);
                    const bool wantNegative = (r == fm.rows);
                    if (wantNegative ? rel >= 0 : rel <= 0) signsOk = false;
                }
        if (!signsOk) continue;

        const int relDigits = 12 + 3 * attempt;
        Matrix m(fm.rows, fm.cols);
        for (std::size_t i = 0; i < fm.rows; ++i)
            for (std::size_t j = 0; j < fm.cols; ++j)
                m(i, j) = detail::rationalize(fm.at(i, j), relDigits);

        if (isTPkAllMinors(m, n - 1).holds && determinant(m) < 0)
            return {std::move(m), fm.certifiedMargin, attempt + 1};
    }
    throw std::runtime_error("counterexample verification failed after retry budget");
}

// Generalized Cauchy matrix 1/(x_i + y_j) over random strictly increasing
// positive rational nodes; always TP, and verified before returning.
inline Matrix randomTPMatrix(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    SeededRng rng(seed);
    auto nodes = [&](int count) {
        Vector v;
        Rational cur = makeRational(rng.nextInt(1, 8), rng.nextInt(1, 8));
        for (int i = 0; i < count; ++i) {
            v.push_back(cur);
            cur += makeRational(rng.nextInt(1, 8), rng.nextInt(1, 8));
        }
        return v;
    };
    const Vector xs = nodes(m), ys = nodes(n);
    Matrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                1 / (xs[static_cast<std::size_t>(i)] + ys[static_cast<std::size_t>(j)]);
    if (!isTPkContiguous(out, std::min(m, n)).holds)
        throw std::logic_error("Cauchy construction failed verification");
    return out;
}

struct OrthantReport {
    bool allPassed = true;
    int trialsRun = 0;
    std::optional<Vector> counterexample;
    std::string failedCheck; // "snr" or "vd" when a trial fails
};

// Samples vectors in the given (non-alternating) open orthant and asserts
// the sign non-reversal and variation diminution clauses on each: strict
// forms for TP mode, non-strict for the TN analogue.
inline OrthantReport orthantHarness(const Matrix& ar, const OrthantPattern& pattern, int trials,
                                    std::uint64_t seed, VdMode mode = VdMode::TP) {
    if (!ar.isSquare() || pattern.signs.size() != ar.rows())
        throw std::invalid_argument("square matrix matching the pattern required");
    if (pattern.isAlternatingPattern())
        throw std::invalid_argument("theorem excludes the alternating bi-orthant");
    SeededRng rng(seed);
    OrthantReport report;
    for (int t = 0; t < trials; ++t) {
        Vector x(pattern.signs.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = Rational(pattern.signs[i]) * makeRational(rng.nextInt(1, 100), rng.nextInt(1, 100));
        ++report.trialsRun;
        if (!signNonReversal(ar, x, /*strict=*/mode == VdMode::TP)) {
            report.allPassed = false;
            report.counterexample = std::move(x);
            report.failedCheck = "snr";
            return report;
        }
        if (!variationDiminutionCheck(ar, x, mode)) {
            report.allPassed = false;
            report.counterexample = std::move(x);
            report.failedCheck = "vd";
            return report;
        }
    }
    return report;
}

} // namespace totalpos
