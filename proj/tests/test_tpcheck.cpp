#include "totalpos/tpcheck.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace totalpos;

TEST_CASE("isTPkAllMinors examples") {
    CHECK(isTPkAllMinors(Matrix{{2, 1}, {1, 1}}, 2).holds);
    CHECK(oracles::allMinorsSatisfy(Matrix{{2, 1}, {1, 1}}, 2, true));

    const Verdict v = isTPkAllMinors(corpus::tnNilpotent2x2(), 1);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->rowIdx == std::vector<int>{1});
    CHECK(v.certificate->colIdx == std::vector<int>{1});
    CHECK(v.certificate->value == 0);

    CHECK(isTPkAllMinors(Matrix{{1}}, 1).holds);
    CHECK_THROWS_AS(isTPkAllMinors(Matrix{{1}}, 2), std::invalid_argument);
}

TEST_CASE("isTNkAllMinors examples") {
    CHECK(isTNkAllMinors(corpus::tnExample3x3(), 3).holds);
    CHECK(isTNkAllMinors(corpus::tnNilpotent2x2(), 2).holds);

    const Verdict v = isTNkAllMinors(Matrix{{1, 2}, {2, 1}}, 2);
    REQUIRE_FALSE(v.holds);
    CHECK(v.certificate->value == -3);
}

TEST_CASE("isTPkContiguous examples") {
    CHECK(isTPkContiguous(Matrix{{2, 1}, {1, 1}}, 2).holds);

    // 3x3 Cauchy matrix on nodes x = y = (1, 2, 3)
    Matrix cauchy(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            cauchy(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) =
                makeRational(1, i + j);
    CHECK(isTPkContiguous(cauchy, 3).holds);

    CHECK_FALSE(isTPkContiguous(Matrix{{1, 2}, {2, 1}}, 2).holds);
}

TEST_CASE("signNonReversal basics") {
    CHECK(signNonReversal(Matrix{{2, 1}, {1, 1}}, {1, -1}, true));
    CHECK_FALSE(signNonReversal(Matrix{{1, 2}, {2, 1}}, {1, -2}, true));
    CHECK(signNonReversal(Matrix{{1}}, {1}, true));
    CHECK_THROWS_AS(signNonReversal(Matrix{{1}}, {0}, true), std::invalid_argument);

    // non-strict succeeds on a zero product with nonzero coordinate
    CHECK(signNonReversal(Matrix{{0, 1}, {0, 0}}, {1, 0}, false));
}

TEST_CASE("isTPkSnrSingle examples") {
    CHECK(isTPkSnrSingle(Matrix{{2, 1}, {1, 1}}, 2).holds);

    const Verdict v = isTPkSnrSingle(Matrix{{1, 2}, {2, 1}}, 2);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->witness == Vector{1, -2});

    CHECK_FALSE(isTPkSnrSingle(Matrix{{0}}, 1).holds);
}

TEST_CASE("isTNkSnrSingle examples") {
    CHECK(isTNkSnrSingle(corpus::tnExample3x3(), 3).holds);
    CHECK_FALSE(isTNkSnrSingle(Matrix{{1, 2}, {2, 1}}, 2).holds);
    CHECK(isTNkSnrSingle(corpus::tnNilpotent2x2(), 2).holds);

    const AlternatingProvider bad = [](int r) { return Vector(static_cast<std::size_t>(r), Rational(1)); };
    CHECK_THROWS_WITH(isTNkSnrSingle(corpus::tnExample3x3(), 2, bad), "alpha not alternating");
}

TEST_CASE("variationDiminutionCheck examples") {
    CHECK(variationDiminutionCheck(Matrix{{2, 1}, {1, 1}}, {1, -1}, VdMode::TP));
    CHECK_FALSE(variationDiminutionCheck(Matrix{{1, 2}, {2, 1}}, {1, -2}, VdMode::TP));
    CHECK(variationDiminutionCheck(Matrix::identity(2), {1, 1}, VdMode::TN));
    CHECK_THROWS_AS(variationDiminutionCheck(Matrix::identity(2), {0, 0}, VdMode::TP),
                    std::invalid_argument);

    // wide matrix, equality with Ax = 0: the boundary clause does not apply
    CHECK(variationDiminutionCheck(Matrix{{1, 1}}, {1, -1}, VdMode::TP));
    CHECK(variationDiminutionCheck(Matrix{{1, 1}}, {1, -1}, VdMode::TN));
}

TEST_CASE("isTPVdSingle examples") {
    CHECK(isTPVdSingle(Matrix{{2, 1}, {1, 1}}).holds);
    CHECK_FALSE(isTPVdSingle(Matrix{{1, 2}, {2, 1}}).holds);
    CHECK(isTPVdSingle(Matrix{{5}}).holds);
}

TEST_CASE("isTNVdSingle examples") {
    CHECK(isTNVdSingle(corpus::tnExample3x3()).holds);
    CHECK_FALSE(isTNVdSingle(Matrix{{1, 2}, {2, 1}}).holds);
    CHECK(isTNVdSingle(Matrix::identity(2)).holds);
}

TEST_CASE("routes agree with the definitional oracle on a mixed corpus") {
    corpus::Options opt;
    opt.cauchyCount = 12;
    opt.randomCount = 40;
    opt.karlin = false;
    const auto matrices = corpus::build(opt);

    for (const auto& a : matrices) {
        const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
        bool prevTp = true, prevTn = true;
        for (int k = 1; k <= kFull; ++k) {
            const bool tp = isTPkAllMinors(a, k).holds;
            CHECK(isTPkContiguous(a, k).holds == tp);
            CHECK(isTPkSnrSingle(a, k).holds == tp);
            const bool tn = isTNkAllMinors(a, k).holds;
            CHECK(isTNkSnrSingle(a, k).holds == tn);
            // monotonicity in k
            CHECK((prevTp || !tp));
            CHECK((prevTn || !tn));
            prevTp = tp;
            prevTn = tn;
        }
        CHECK(isTPVdSingle(a).holds == isTPkAllMinors(a, kFull).holds);
        CHECK(isTNVdSingle(a).holds == isTNkAllMinors(a, kFull).holds);
    }
}

TEST_CASE("TN single-vector routes hold for several alternating alphas") {
    const AlternatingProvider alphas[] = {
        [](int r) { return defaultAlternating(r); },
        [](int r) {
            Vector v(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i)
                v[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1 : -1) * Rational(i + 2);
            return v;
        },
        [](int r) {
            Vector v(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i)
                v[static_cast<std::size_t>(i)] = (i % 2 == 0 ? -1 : 1) * makeRational(1, i + 1);
            return v;
        },
    };

    corpus::Options opt;
    opt.cauchyCount = 6;
    opt.randomCount = 24;
    opt.karlin = false;
    const auto matrices = corpus::build(opt);
    for (const auto& a : matrices) {
        const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
        const bool tn = isTNkAllMinors(a, kFull).holds;
        for (const auto& alpha : alphas) {
            CHECK(isTNkSnrSingle(a, kFull, alpha).holds == tn);
            CHECK(isTNVdSingle(a, alpha).holds == tn);
        }
    }
}

TEST_CASE("failed verdicts carry replayable certificates") {
    corpus::Options opt;
    opt.cauchyCount = 4;
    opt.randomCount = 40;
    opt.karlin = false;
    const auto matrices = corpus::build(opt);

    int replayed = 0;
    for (const auto& a : matrices) {
        const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
        for (const Verdict& v :
             {isTPkAllMinors(a, kFull), isTNkAllMinors(a, kFull), isTPkContiguous(a, kFull),
              isTPkSnrSingle(a, kFull), isTNkSnrSingle(a, kFull), isTPVdSingle(a),
              isTNVdSingle(a)}) {
            if (v.holds) continue;
            REQUIRE(v.certificate.has_value());
            CHECK(oracles::replay(a, *v.certificate));
            ++replayed;
        }
    }
    CHECK(replayed > 50); // the corpus must actually exercise failures
}
