#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace totalpos {

// Exact arbitrary-precision arithmetic: every verdict in this library is a
// strict/non-strict sign dichotomy, so there is no epsilon anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sgn(const Rational& r) { return r.sign(); }
inline int sgn(const Integer& z) { return z.sign(); }

// Canonical form (lowest terms, positive denominator) is maintained by the
// backend; this wrapper only adds the zero-denominator check.
inline Rational makeRational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

inline Integer pow10(unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

// Serialized form used everywhere (files, JSON, certificates): "p" for
// integers, "p/q" otherwise.
inline std::string toString(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

// Accepts optionally-signed integers ("7", "-3"), rational literals ("3/4"),
// and decimals parsed exactly ("1.25" -> 5/4, "-.5" -> -1/2).
inline Rational parseRational(std::string_view token) {
    const std::string_view original = token;
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("invalid rational literal '" + std::string(original) + "'");
    };

    bool negative = false;
    if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    if (token.empty()) return fail();

    Rational value;
    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        std::string_view num = token.substr(0, slash);
        std::string_view den = token.substr(slash + 1);
        if (!detail::allDigits(num) || !detail::allDigits(den)) return fail();
        Integer d{std::string(den)};
        if (d == 0) return fail();
        value = makeRational(Integer{std::string(num)}, std::move(d));
    } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
        std::string_view whole = token.substr(0, dot);
        std::string_view frac = token.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        if (!whole.empty() && !detail::allDigits(whole)) return fail();
        if (!frac.empty() && !detail::allDigits(frac)) return fail();
        Integer scaled = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        Integer den = pow10(static_cast<unsigned>(frac.size()));
        scaled *= den;
        if (!frac.empty()) scaled += Integer{std::string(frac)};
        value = makeRational(std::move(scaled), std::move(den));
    } else {
        if (!detail::allDigits(token)) return fail();
        value = Rational(Integer{std::string(token)});
    }
    return negative ? Rational(-value) : value;
}

// Seeded RNG used by every generator/falsifier in the library. The standard
// <random> distributions are not pinned across implementations, so results
// would not be reproducible through them.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    // splitmix64; stable across platforms.
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long long nextInt(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace totalpos
