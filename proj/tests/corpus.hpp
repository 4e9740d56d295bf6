// Shared matrix corpus for the equivalence suites: Cauchy TP matrices,
// the totally non-negative examples from the LCP discussion, random
// small-integer matrices, and rationalized Karlin counterexamples.
#pragma once

#include "totalpos/matrix.hpp"
#include "totalpos/pfkarlin.hpp"

#include <vector>

namespace corpus {

using totalpos::Matrix;
using totalpos::Rational;

inline Matrix tnExample3x3() { return Matrix{{2, 1, 1}, {2, 1, 1}, {1, 1, 1}}; }
inline Matrix tnNilpotent2x2() { return Matrix{{0, 1}, {0, 0}}; }
inline Matrix tnZeroRow3x3() { return Matrix{{0, 0, 0}, {2, 2, 1}, {1, 1, 1}}; }

inline std::vector<Matrix> tnExamples() {
    return {tnExample3x3(), tnNilpotent2x2(), tnZeroRow3x3()};
}

struct Options {
    int cauchyCount = 60;     // sizes cycle over 1..6
    int randomCount = 140;    // entries in [-3, 3], sizes 1..5
    bool karlin = true;       // n = 3, 4, 5 counterexamples
    std::uint64_t seed = 2024;
};

inline std::vector<Matrix> build(const Options& opt = {}) {
    std::vector<Matrix> out;
    totalpos::SeededRng rng(opt.seed);

    for (int i = 0; i < opt.cauchyCount; ++i) {
        const int m = static_cast<int>(rng.nextInt(1, 6));
        const int n = static_cast<int>(rng.nextInt(1, 6));
        out.push_back(totalpos::randomTPMatrix(m, n, rng.next()));
    }

    for (int i = 0; i < opt.randomCount; ++i) {
        const int m = static_cast<int>(rng.nextInt(1, 5));
        const int n = static_cast<int>(rng.nextInt(1, 5));
        Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c)
                a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    Rational(rng.nextInt(-3, 3));
        out.push_back(std::move(a));
    }

    for (const auto& m : tnExamples()) out.push_back(m);
    out.push_back(Matrix::identity(3));
    out.push_back(Matrix{{1, 2}, {2, 1}});

    if (opt.karlin)
        for (int n = 3; n <= 5; ++n)
            out.push_back(totalpos::tpCounterexample(n, 0).matrix);

    return out;
}

} // namespace corpus
