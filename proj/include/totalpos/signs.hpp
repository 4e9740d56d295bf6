#pragma once

#include "totalpos/matrix.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace totalpos {

using SignVector = std::vector<int>;

inline SignVector signsOf(const Vector& x) {
    SignVector s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = sgn(x[i]);
    return s;
}

// S^-(x): sign changes after deleting the zero entries; S^-(0) = 0.
inline int signChangesMinus(const Vector& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& v : x) {
        const int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

namespace detail {

// Forward pass of the S^+ dynamic program. best[s] is the maximum number of
// sign changes over assignments of the processed prefix whose final sign is
// s (index 0 <-> -1, index 1 <-> +1); kNone marks unreachable states.
inline constexpr int kNone = -1;

inline std::array<int, 2> splusForward(const Vector& x, int firstSignRestriction = 0) {
    std::array<int, 2> best{kNone, kNone};
    bool started = false;
    for (const auto& v : x) {
        const int s = sgn(v);
        std::array<int, 2> allowed{};
        if (!started && firstSignRestriction != 0) {
            if (s != 0 && s != firstSignRestriction) return {kNone, kNone};
            allowed = {firstSignRestriction == -1, firstSignRestriction == +1};
        } else if (s == 0) {
            allowed = {true, true};
        } else {
            allowed = {s == -1, s == +1};
        }
        std::array<int, 2> next{kNone, kNone};
        for (int to = 0; to < 2; ++to) {
            if (!allowed[static_cast<std::size_t>(to)]) continue;
            if (!started) {
                next[static_cast<std::size_t>(to)] = 0;
                continue;
            }
            for (int from = 0; from < 2; ++from) {
                const int b = best[static_cast<std::size_t>(from)];
                if (b == kNone) continue;
                next[static_cast<std::size_t>(to)] =
                    std::max(next[static_cast<std::size_t>(to)], b + (from != to ? 1 : 0));
            }
        }
        best = next;
        started = true;
    }
    return best;
}

} // namespace detail

// S^+(x): maximum sign changes over all +-1 assignments to the zero entries;
// S^+(0) = n by convention.
inline int signChangesPlus(const Vector& x) {
    if (isZeroVector(x)) return static_cast<int>(x.size());
    const auto best = detail::splusForward(x);
    return std::max(best[0], best[1]);
}

struct BoundarySigns {
    std::vector<int> first; // subset of {-1, +1}
    std::vector<int> last;
};

// Among the zero assignments achieving S^+(x), the possible signs of the
// first and last coordinate. Singleton whenever the corresponding endpoint
// of x is nonzero (and, as the property suite confirms, in fact always).
inline BoundarySigns forcedBoundarySigns(const Vector& x) {
    if (isZeroVector(x))
        throw std::invalid_argument("boundary signs undefined for zero vector");
    const int splus = signChangesPlus(x);
    BoundarySigns out;
    for (int s : {-1, +1}) {
        const auto restricted = detail::splusForward(x, s);
        if (std::max(restricted[0], restricted[1]) == splus) out.first.push_back(s);
    }
    Vector rev(x.rbegin(), x.rend());
    const int splusRev = signChangesPlus(rev);
    for (int s : {-1, +1}) {
        const auto restricted = detail::splusForward(rev, s);
        if (std::max(restricted[0], restricted[1]) == splusRev) out.last.push_back(s);
    }
    return out;
}

// Membership in alt(n): all coordinates nonzero with alternating signs.
inline bool isAlternating(const Vector& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) return false;
        if (i > 0 && sgn(x[i]) == sgn(x[i - 1])) return false;
    }
    return true;
}

struct SplitParts {
    Vector plus;  // x^+ = (|x| + x)/2
    Vector minus; // x^- = (|x| - x)/2
};

inline SplitParts splitPositiveNegative(const Vector& x) {
    SplitParts out{Vector(x.size(), Rational(0)), Vector(x.size(), Rational(0))};
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0) out.plus[i] = x[i];
        else if (x[i] < 0) out.minus[i] = -x[i];
    }
    return out;
}

// Open-orthant sign pattern: entries are +-1, no zeros.
struct OrthantPattern {
    explicit OrthantPattern(std::vector<int> s) : signs(std::move(s)) {
        if (signs.empty()) throw std::invalid_argument("empty orthant pattern");
        for (int v : signs)
            if (v != -1 && v != 1) throw std::invalid_argument("orthant pattern entries must be +-1");
    }

    bool isAlternatingPattern() const {
        for (std::size_t i = 1; i < signs.size(); ++i)
            if (signs[i] == signs[i - 1]) return false;
        return true;
    }

    std::vector<int> signs;
};

} // namespace totalpos
