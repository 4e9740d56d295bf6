#pragma once

#include "totalpos/lcp.hpp"
#include "totalpos/verdict.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace totalpos {

inline constexpr const char* kToolName = "totalpos";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

// FNV-1a 64-bit over the raw bytes; hex-encoded input digest for reports.
inline std::string digestBytes(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

inline Json toJson(const Vector& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(toString(e));
    return arr;
}

inline Json toJson(const Certificate& c) {
    Json j;
    j["kind"] = kindName(c.kind);
    if (!c.rowIdx.empty()) j["rows"] = c.rowIdx;
    if (!c.colIdx.empty()) j["cols"] = c.colIdx;
    if (!c.witness.empty()) j["witness"] = toJson(c.witness);
    if (!c.witnessSecond.empty()) j["witness_second"] = toJson(c.witnessSecond);
    if (!c.qVec.empty()) j["q"] = toJson(c.qVec);
    if (c.kind == CertificateKind::ViolatingMinor) j["value"] = toString(c.value);
    j["strict"] = c.strictMode;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.pfWindow) j["pf_window"] = {{"r", c.pfWindow->first}, {"l", c.pfWindow->second}};
    return j;
}

inline Json toJson(const Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["order"] = v.order;
    if (v.certificate) j["certificate"] = toJson(*v.certificate);
    return j;
}

inline Json toJson(const LcpSolutionSet& s) {
    Json j;
    j["status"] = statusName(statusOf(s));
    Json sols = Json::array();
    for (const auto& p : s.points) sols.push_back(toJson(p.x));
    j["solutions"] = std::move(sols);
    j["infinite_supports"] = s.infiniteSupports;
    return j;
}

// Common envelope for every CLI report.
inline Json reportEnvelope(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

} // namespace totalpos
