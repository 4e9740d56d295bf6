#include "totalpos/io.hpp"
#include "totalpos/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace totalpos;

TEST_CASE("matrix parsing: comments, decimals, rationals") {
    std::istringstream in(
        "# generated example\n"
        "2 3\n"
        "1 -1.25 3/4\n"
        "  # interior comment\n"
        "\n"
        "0.5 2 -3\n");
    const Matrix m = parseMatrix(in, "t");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 1) == makeRational(-5, 4));
    CHECK(m(0, 2) == makeRational(3, 4));
    CHECK(m(1, 0) == makeRational(1, 2));
}

TEST_CASE("matrix parsing: errors carry positions") {
    std::istringstream bad1("2 2\n1 2\n3\n");
    try {
        parseMatrix(bad1, "t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("expected 2 entries") != std::string::npos);
    }

    std::istringstream bad2("2 2\n1 x\n3 4\n");
    try {
        parseMatrix(bad2, "t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }

    std::istringstream bad3("0 2\n");
    CHECK_THROWS_AS(parseMatrix(bad3, "t"), ParseError);

    std::istringstream bad4("2 2\n1 2\n3 4\n5\n");
    CHECK_THROWS_AS(parseMatrix(bad4, "t"), ParseError); // trailing content
}

TEST_CASE("lcp instance parsing") {
    std::istringstream in(
        "3 3\n"
        "2 1 1\n"
        "2 1 1\n"
        "1 1 1\n"
        "# q\n"
        "-3 -3 -2\n");
    const LcpInstance inst = parseLcpInstance(in, "t");
    CHECK(inst.a == Matrix{{2, 1, 1}, {2, 1, 1}, {1, 1, 1}});
    CHECK(inst.q == Vector{-3, -3, -2});

    std::istringstream nonSquare("2 3\n1 2 3\n4 5 6\n-1 -1\n");
    CHECK_THROWS_AS(parseLcpInstance(nonSquare, "t"), ParseError);

    std::istringstream missingQ("2 2\n1 2\n3 4\n");
    CHECK_THROWS_AS(parseLcpInstance(missingQ, "t"), ParseError);
}

TEST_CASE("sequence parsing") {
    std::istringstream in(
        "# gaussian-ish\n"
        "-2 2\n"
        "1/16 1/2\n"
        "1 1/2 1/16\n");
    const RationalSequence seq = parseSequence(in, "t");
    CHECK(seq.nMin == -2);
    CHECK(seq.nMax == 2);
    CHECK(seq.at(0) == 1);
    CHECK(seq.at(-2) == makeRational(1, 16));

    std::istringstream tooFew("0 2\n1 2\n");
    CHECK_THROWS_AS(parseSequence(tooFew, "t"), ParseError);
    std::istringstream badRange("2 0\n");
    CHECK_THROWS_AS(parseSequence(badRange, "t"), ParseError);
}

TEST_CASE("matrix writing round-trips") {
    Matrix m{{makeRational(1, 3), 2}, {-5, makeRational(-7, 2)}};
    std::ostringstream out;
    writeMatrix(out, m);
    std::istringstream in(out.str());
    CHECK(parseMatrix(in, "t") == m);
}

TEST_CASE("reports round-trip byte-identically modulo timing") {
    Json j = reportEnvelope("check");
    j["verdict"] = toJson(Verdict{false, 2,
                                  Certificate{.kind = CertificateKind::SignReversedVector,
                                              .rowIdx = {1, 2},
                                              .colIdx = {1, 2},
                                              .witness = {1, -2},
                                              .strictMode = true,
                                              .note = "strict sign non-reversal fails"}});
    const std::string once = j.dump(2);
    const std::string twice = Json::parse(once).dump(2);
    CHECK(once == twice);
}

TEST_CASE("digest is stable") {
    CHECK(digestBytes("") == "fnv1a:cbf29ce484222325");
    CHECK(digestBytes("abc") == digestBytes("abc"));
    CHECK(digestBytes("abc") != digestBytes("abd"));
}

TEST_CASE("parsers reject mangled input without crashing") {
    SeededRng rng(999);
    const std::string alphabet = "0123456789/.-+# \nxm";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng.nextInt(0, 60));
        for (int i = 0; i < len; ++i)
            text += alphabet[static_cast<std::size_t>(rng.nextInt(0, static_cast<long long>(alphabet.size()) - 1))];
        std::istringstream m(text), q(text), s(text);
        try { parseMatrix(m, "fuzz"); } catch (const ParseError&) {}
        try { parseLcpInstance(q, "fuzz"); } catch (const ParseError&) {}
        try { parseSequence(s, "fuzz"); } catch (const ParseError&) {}
    }
    SUCCEED("no crash, only ParseError");
}
