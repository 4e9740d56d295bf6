#include "totalpos/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace totalpos;

TEST_CASE("rational literals parse exactly") {
    CHECK(parseRational("3/4") == makeRational(3, 4));
    CHECK(parseRational("-3/4") == makeRational(-3, 4));
    CHECK(parseRational("7") == Rational(7));
    CHECK(parseRational("+7") == Rational(7));
    CHECK(parseRational("-0") == Rational(0));
    CHECK(parseRational("6/8") == makeRational(3, 4)); // normalized
}

TEST_CASE("decimals parse exactly, not through floating point") {
    CHECK(parseRational("1.25") == makeRational(5, 4));
    CHECK(parseRational("-1.25") == makeRational(-5, 4));
    CHECK(parseRational("0.1") == makeRational(1, 10)); // inexact in binary
    CHECK(parseRational(".5") == makeRational(1, 2));
    CHECK(parseRational("2.") == Rational(2));
    CHECK(parseRational("0.000000000000000001") == makeRational(1, pow10(18)));
}

TEST_CASE("bad literals are rejected") {
    for (const char* bad : {"", "-", "1/0", "3//4", "1.2.3", "a", "1/-2", "1e3", " 1"})
        CHECK_THROWS_AS(parseRational(bad), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
    for (const char* lit : {"3/4", "-3/4", "7", "0", "-12345678901234567890/7"}) {
        const Rational r = parseRational(lit);
        CHECK(parseRational(toString(r)) == r);
    }
    CHECK(toString(makeRational(5, 4)) == "5/4");
    CHECK(toString(Rational(-3)) == "-3");
}

TEST_CASE("comparisons are exact at arbitrary precision") {
    const Rational tiny = makeRational(1, pow10(40));
    CHECK(tiny > 0);
    CHECK(tiny + tiny == makeRational(2, pow10(40)));
    CHECK(makeRational(1, 3) + makeRational(1, 6) == makeRational(1, 2));
    // denominators stay positive and fractions stay reduced
    const Rational r = makeRational(-6, -8);
    CHECK(numerator(r) == 3);
    CHECK(denominator(r) == 4);
}

TEST_CASE("seeded rng is reproducible") {
    SeededRng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.nextInt(-5, 5) == b.nextInt(-5, 5));
    SeededRng c(42);
    for (int i = 0; i < 1000; ++i) {
        const long long v = c.nextInt(1, 20);
        CHECK(v >= 1);
        CHECK(v <= 20);
    }
}
