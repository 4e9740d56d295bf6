#pragma once

#include "totalpos/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace totalpos {

enum class CertificateKind {
    ViolatingMinor,
    SignReversedVector,
    VdViolation,
    LcpWitness,
};

inline const char* kindName(CertificateKind k) {
    switch (k) {
        case CertificateKind::ViolatingMinor: return "violating-minor";
        case CertificateKind::SignReversedVector: return "sign-reversed-vector";
        case CertificateKind::VdViolation: return "vd-violation";
        case CertificateKind::LcpWitness: return "lcp-witness";
    }
    return "?";
}

// Machine-checkable witness for a failed verdict. rowIdx/colIdx locate the
// offending submatrix (1-based); the remaining fields depend on the kind:
//   violating-minor       value = the non-positive (TP) / negative (TN) minor
//   sign-reversed-vector  witness = the test vector whose sign is reversed
//   vd-violation          witness = the test vector violating diminution
//   lcp-witness           witness = expected unique solution, witnessSecond =
//                         a differing actual solution (when one exists),
//                         qVec = the LCP offset vector
// Replaying a certificate against the input matrix reproduces the violation
// with matcore/signs primitives alone.
struct Certificate {
    CertificateKind kind = CertificateKind::ViolatingMinor;
    std::vector<int> rowIdx;
    std::vector<int> colIdx;
    Vector witness;
    Vector witnessSecond;
    Vector qVec;
    Rational value;
    bool strictMode = true; // strict (TP) vs non-strict (TN) context
    std::string note;
    // Set by the sequence checks: the failing Toeplitz window (r, l).
    std::optional<std::pair<int, int>> pfWindow;
};

struct Verdict {
    bool holds = false;
    int order = 0; // the k that was tested
    std::optional<Certificate> certificate;
};

inline Verdict passVerdict(int order) { return {true, order, std::nullopt}; }

inline Verdict failVerdict(int order, Certificate cert) {
    return {false, order, std::move(cert)};
}

} // namespace totalpos
