// Command-line front end: check matrices by any characterization, solve LCPs
// exactly, generate corpora and counterexamples, cross-compare methods, and
// test Polya frequency windows. Reports are JSON on stdout; exit code 0 means
// the verdict holds (or the command succeeded), 1 means it does not, 2 means
// bad input.

#include "totalpos/io.hpp"
#include "totalpos/pfkarlin.hpp"
#include "totalpos/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace totalpos;

struct GlobalOptions {
    std::uint64_t seed = 0;
    int cap = kDefaultEnumerationCap;
    bool json = true;
    bool quiet = false;
};

class Timer {
public:
    double elapsedMs() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json inputInfo(const std::string& path) {
    return {{"path", path}, {"digest", digestBytes(slurp(path))}};
}

void emit(const GlobalOptions& g, const Json& report, const std::string& humanLine) {
    if (g.quiet) return;
    if (g.json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << humanLine << '\n';
}

int emitError(const GlobalOptions& g, const std::string& command, const std::string& message,
              int line = 0, int column = 0) {
    Json j = reportEnvelope(command);
    j["error"] = message;
    if (line > 0) {
        j["line"] = line;
        j["column"] = column;
    }
    if (!g.quiet) {
        if (g.json) std::cout << j.dump(2) << '\n';
        else std::cerr << "error: " << message << '\n';
    }
    return 2;
}

// ---- check ----------------------------------------------------------------

int runCheck(const GlobalOptions& g, const std::string& path, const std::string& method,
             const std::string& cls, std::optional<int> kOpt) {
    Timer timer;
    const Matrix a = readMatrixFile(path);
    const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
    const int k = kOpt.value_or(kFull);

    Verdict verdict;
    bool sufficientOnly = false;
    bool usesK = true;
    if (method == "minors") {
        verdict = cls == "tp" ? isTPkAllMinors(a, k) : isTNkAllMinors(a, k);
    } else if (method == "contiguous") {
        if (cls == "tn")
            throw std::invalid_argument("no contiguous-minor test exists for TN (Fekete-Schoenberg is TP-only)");
        verdict = isTPkContiguous(a, k);
    } else if (method == "snr") {
        verdict = cls == "tp" ? isTPkSnrSingle(a, k) : isTNkSnrSingle(a, k);
    } else if (method == "vd") {
        usesK = false;
        verdict = cls == "tp" ? isTPVdSingle(a) : isTNVdSingle(a);
    } else if (method == "lcp") {
        if (cls == "tp") {
            verdict = isTPkLcpSingle(a, k, g.cap);
        } else {
            verdict = tnSufficientSingle(a, k, g.cap);
            sufficientOnly = true;
        }
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }

    Json j = reportEnvelope("check");
    j["method"] = method;
    j["class"] = cls;
    if (usesK) j["k"] = k;
    j["input"] = inputInfo(path);
    j["verdict"] = toJson(verdict);
    if (sufficientOnly) j["sufficient_only"] = true; // Prop. 2.8 is one-directional
    j["timing_ms"] = timer.elapsedMs();

    std::string line = std::string(cls) + "/" + method + ": " + (verdict.holds ? "holds" : "fails");
    if (sufficientOnly && !verdict.holds) line += " (sufficient-only: no conclusion)";
    emit(g, j, line);
    return verdict.holds ? 0 : 1;
}

// ---- lcp solve ------------------------------------------------------------

Vector readVectorFile(const std::string& path, std::size_t expected) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Vector out;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tok;
        bool first = true;
        while (ls >> tok) {
            if (first && tok[0] == '#') break;
            first = false;
            out.push_back(parseRational(tok));
        }
    }
    if (out.size() != expected)
        throw ParseError(path, lineNo, 1,
                         "expected " + std::to_string(expected) + " q entries, found " +
                             std::to_string(out.size()));
    return out;
}

int runLcpSolve(const GlobalOptions& g, const std::string& path, const std::string& qPath) {
    Timer timer;
    std::optional<LcpInstance> inst;
    if (qPath.empty()) {
        inst.emplace(readLcpInstanceFile(path));
    } else {
        Matrix a = readMatrixFile(path);
        Vector q = readVectorFile(qPath, a.rows());
        inst.emplace(std::move(a), std::move(q));
    }
    const auto sols = enumerateSolutions(*inst, g.cap);

    Json j = reportEnvelope("lcp solve");
    j["input"] = inputInfo(path);
    if (!qPath.empty()) j["q_input"] = inputInfo(qPath);
    j["cap"] = g.cap;
    j.update(toJson(sols));
    j["timing_ms"] = timer.elapsedMs();
    emit(g, j, std::string("status: ") + statusName(statusOf(sols)) + ", " +
                   std::to_string(sols.points.size()) + " point(s)");
    return 0;
}

// ---- generate -------------------------------------------------------------

int runGenerate(const GlobalOptions& g, const std::string& kind, int n, std::optional<int> mOpt,
                const std::string& outPath) {
    Timer timer;
    Json j = reportEnvelope("generate");
    j["kind"] = kind;
    j["n"] = n;
    j["seed"] = g.seed;
    j["out"] = outPath;

    Matrix result{1, 1};
    if (kind == "karlin") {
        auto ce = tpCounterexample(n, g.seed);
        result = std::move(ce.matrix);
        j["float_margin"] = ce.floatMargin;
        j["attempts"] = ce.attempts;
        j["verified"] = {{"tp_order", n - 1}, {"det_negative", true}};
    } else if (kind == "cauchy") {
        const int m = mOpt.value_or(n);
        if (n < 1 || m < 1) throw std::invalid_argument("dimensions must be positive");
        j["m"] = m;
        result = randomTPMatrix(m, n, g.seed);
        j["verified"] = {{"tp_order", std::min(m, n)}};
    } else {
        throw std::invalid_argument("unknown generator kind '" + kind + "'");
    }

    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
    writeMatrix(out, result);
    out.close();
    j["output_digest"] = digestBytes(slurp(outPath));
    j["timing_ms"] = timer.elapsedMs();
    emit(g, j, "wrote " + std::to_string(result.rows()) + "x" + std::to_string(result.cols()) +
                   " matrix to " + outPath);
    return 0;
}

// ---- compare --------------------------------------------------------------

int runCompare(const GlobalOptions& g, const std::string& path, std::optional<int> kMaxOpt) {
    Timer timer;
    const Matrix a = readMatrixFile(path);
    const int kFull = static_cast<int>(std::min(a.rows(), a.cols()));
    if (kFull > 6) throw std::invalid_argument("compare is capped at min(m,n) <= 6");
    const int kMax = kMaxOpt.value_or(kFull);
    if (kMax < 1 || kMax > kFull) throw std::invalid_argument("kmax out of range");

    bool agree = true;
    Json tpTable = Json::array();
    for (int k = 1; k <= kMax; ++k) {
        const bool minors = isTPkAllMinors(a, k).holds;
        const bool contiguous = isTPkContiguous(a, k).holds;
        const bool snr = isTPkSnrSingle(a, k).holds;
        const bool lcp = isTPkLcpSingle(a, k, g.cap).holds;
        const bool rowAgree = minors == contiguous && minors == snr && minors == lcp;
        agree = agree && rowAgree;
        tpTable.push_back({{"k", k},
                           {"minors", minors},
                           {"contiguous", contiguous},
                           {"snr", snr},
                           {"lcp", lcp},
                           {"agree", rowAgree}});
    }
    const bool tpFullMinors = isTPkAllMinors(a, kFull).holds;
    const bool tpVd = isTPVdSingle(a).holds;
    agree = agree && tpFullMinors == tpVd;

    Json tnTable = Json::array();
    for (int k = 1; k <= kMax; ++k) {
        const bool minors = isTNkAllMinors(a, k).holds;
        const bool snr = isTNkSnrSingle(a, k).holds;
        agree = agree && minors == snr;
        tnTable.push_back({{"k", k}, {"minors", minors}, {"snr", snr}, {"agree", minors == snr}});
    }
    const bool tnFullMinors = isTNkAllMinors(a, kFull).holds;
    const bool tnVd = isTNVdSingle(a).holds;
    agree = agree && tnFullMinors == tnVd;

    Json j = reportEnvelope("compare");
    j["input"] = inputInfo(path);
    j["kmax"] = kMax;
    j["tp"] = std::move(tpTable);
    j["tp_full"] = {{"minors", tpFullMinors}, {"vd", tpVd}, {"agree", tpFullMinors == tpVd}};
    j["tn"] = std::move(tnTable);
    j["tn_full"] = {{"minors", tnFullMinors}, {"vd", tnVd}, {"agree", tnFullMinors == tnVd}};
    j["agree"] = agree;
    j["timing_ms"] = timer.elapsedMs();
    emit(g, j, agree ? "all methods agree" : "METHOD DISAGREEMENT (implementation bug)");
    return agree ? 0 : 1;
}

// ---- pf -------------------------------------------------------------------

int runPf(const GlobalOptions& g, const std::string& path, int k, int lMin, int lMax) {
    Timer timer;
    const RationalSequence seq = readSequenceFile(path);
    const Verdict verdict = isPFkWindowed(seq, k, lMin, lMax, g.cap);

    Json j = reportEnvelope("pf");
    j["input"] = inputInfo(path);
    j["k"] = k;
    j["l_range"] = {{"min", lMin}, {"max", lMax}};
    j["verdict"] = toJson(verdict);
    j["timing_ms"] = timer.elapsedMs();
    emit(g, j, std::string("TP_k Polya frequency on windows: ") + (verdict.holds ? "holds" : "fails"));
    return verdict.holds ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total-positivity toolkit"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--seed", g.seed, "RNG seed for generators and falsifiers");
    app.add_option("--cap", g.cap, "LCP support-enumeration cap")->envname("TOTALPOS_CAP");
    app.add_flag("--json,!--no-json", g.json, "emit JSON reports (default on)");
    app.add_flag("--quiet", g.quiet, "suppress report output");

    // check
    std::string checkPath, method, cls;
    std::optional<int> kOpt;
    auto* check = app.add_subcommand("check", "decide TP_k/TN_k by a chosen characterization");
    check->add_option("path", checkPath, "matrix file")->required();
    check->add_option("--method", method, "minors|contiguous|snr|vd|lcp")
        ->required()
        ->check(CLI::IsMember({"minors", "contiguous", "snr", "vd", "lcp"}));
    check->add_option("--class", cls, "tp|tn")->required()->check(CLI::IsMember({"tp", "tn"}));
    check->add_option("--k", kOpt, "order (default min(m,n); ignored by vd)");

    // lcp solve
    auto* lcpCmd = app.add_subcommand("lcp", "linear complementarity commands");
    lcpCmd->require_subcommand(1);
    std::string lcpPath, lcpQPath;
    auto* solve = lcpCmd->add_subcommand("solve", "enumerate the exact solution set");
    solve->add_option("path", lcpPath, "instance file (matrix + q line), or matrix file with --q")
        ->required();
    solve->add_option("--q", lcpQPath, "separate q vector file");

    // generate
    std::string genKind, genOut;
    int genN = 0;
    std::optional<int> genM;
    auto* gen = app.add_subcommand("generate", "write a generated matrix file");
    gen->add_option("kind", genKind, "karlin|cauchy")
        ->required()
        ->check(CLI::IsMember({"karlin", "cauchy"}));
    gen->add_option("--n", genN, "size")->required();
    gen->add_option("--m", genM, "row count (cauchy only; default n)");
    gen->add_option("--out", genOut, "output file")->required();

    // compare
    std::string cmpPath;
    std::optional<int> cmpKMax;
    auto* cmp = app.add_subcommand("compare", "cross-validate every method on one matrix");
    cmp->add_option("path", cmpPath, "matrix file")->required();
    cmp->add_option("--kmax", cmpKMax, "largest order to compare (default min(m,n))");

    // pf
    std::string pfPath;
    int pfK = 0, pfLMin = 0, pfLMax = 0;
    auto* pf = app.add_subcommand("pf", "Polya frequency window test for a sequence");
    pf->add_option("path", pfPath, "sequence file")->required();
    pf->add_option("--k", pfK, "order")->required();
    pf->add_option("--lmin", pfLMin, "first window offset")->required();
    pf->add_option("--lmax", pfLMax, "last window offset")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (check->parsed()) return runCheck(g, checkPath, method, cls, kOpt);
        if (solve->parsed()) return runLcpSolve(g, lcpPath, lcpQPath);
        if (gen->parsed()) return runGenerate(g, genKind, genN, genM, genOut);
        if (cmp->parsed()) return runCompare(g, cmpPath, cmpKMax);
        if (pf->parsed()) return runPf(g, pfPath, pfK, pfLMin, pfLMax);
    } catch (const ParseError& e) {
        return emitError(g, command, e.what(), e.line(), e.column());
    } catch (const std::exception& e) {
        return emitError(g, command, e.what());
    }
    return 2;
}
