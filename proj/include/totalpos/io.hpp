#pragma once

#include "totalpos/lcp.hpp"
#include "totalpos/matrix.hpp"
#include "totalpos/pfkarlin.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace totalpos {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

namespace detail {

struct Token {
    std::string text;
    int line;
    int column; // 1-based character offset of the token start
};

// Shared lexical layer of all text formats: '#' comment lines and blank
// lines are ignored, everything else is whitespace-separated tokens.
class TokenReader {
public:
    TokenReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    std::optional<Token> next() {
        while (true) {
            if (pos_ >= current_.size()) {
                if (!std::getline(in_, current_)) return std::nullopt;
                ++lineNo_;
                pos_ = 0;
                if (firstNonSpace(current_) == '#') {
                    pos_ = current_.size();
                    continue;
                }
            }
            while (pos_ < current_.size() && isSpace(current_[pos_])) ++pos_;
            if (pos_ >= current_.size()) continue;
            const std::size_t start = pos_;
            while (pos_ < current_.size() && !isSpace(current_[pos_])) ++pos_;
            return Token{current_.substr(start, pos_ - start), lineNo_, static_cast<int>(start) + 1};
        }
    }

    // Tokens of the next non-comment, non-blank line, as a unit.
    std::optional<std::vector<Token>> nextLine() {
        auto first = next();
        if (!first) return std::nullopt;
        std::vector<Token> out{*first};
        while (pos_ < current_.size()) {
            while (pos_ < current_.size() && isSpace(current_[pos_])) ++pos_;
            if (pos_ >= current_.size()) break;
            const std::size_t start = pos_;
            while (pos_ < current_.size() && !isSpace(current_[pos_])) ++pos_;
            out.push_back({current_.substr(start, pos_ - start), lineNo_, static_cast<int>(start) + 1});
        }
        return out;
    }

    const std::string& source() const { return source_; }
    int lastLine() const { return lineNo_; }

private:
    static bool isSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

    static char firstNonSpace(const std::string& s) {
        for (char c : s)
            if (!isSpace(c)) return c;
        return '\0';
    }

    std::istream& in_;
    std::string source_;
    std::string current_;
    std::size_t pos_ = 0;
    int lineNo_ = 0;
};

inline Rational parseEntry(const TokenReader& reader, const Token& t) {
    try {
        return parseRational(t.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.source(), t.line, t.column, e.what());
    }
}

inline long parseCount(const TokenReader& reader, const Token& t, const char* what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(reader.source(), t.line, t.column, std::string("expected ") + what);
    }
}

inline Matrix parseMatrixBody(TokenReader& reader) {
    auto header = reader.nextLine();
    if (!header || header->size() != 2)
        throw ParseError(reader.source(), header ? (*header)[0].line : reader.lastLine() + 1, 1,
                         "expected header line 'm n'");
    const long m = parseCount(reader, (*header)[0], "row count");
    const long n = parseCount(reader, (*header)[1], "column count");
    if (m < 1 || n < 1)
        throw ParseError(reader.source(), (*header)[0].line, (*header)[0].column,
                         "matrix dimensions must be positive");
    Matrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long i = 0; i < m; ++i) {
        auto row = reader.nextLine();
        if (!row)
            throw ParseError(reader.source(), reader.lastLine() + 1, 1,
                             "unexpected end of input: expected matrix row " + std::to_string(i + 1));
        if (row->size() != static_cast<std::size_t>(n))
            throw ParseError(reader.source(), (*row)[0].line, (*row)[0].column,
                             "expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(row->size()));
        for (long j = 0; j < n; ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                parseEntry(reader, (*row)[static_cast<std::size_t>(j)]);
    }
    return out;
}

} // namespace detail

// Matrix text format: '#' comments ignored; header "m n"; then m lines of n
// entries, each a signed decimal (parsed exactly) or rational literal.
inline Matrix parseMatrix(std::istream& in, const std::string& source = "<input>") {
    detail::TokenReader reader(in, source);
    Matrix out = detail::parseMatrixBody(reader);
    if (auto extra = reader.next())
        throw ParseError(source, extra->line, extra->column, "unexpected trailing content");
    return out;
}

// Instance format: a matrix followed by one non-comment line of n entries
// for q.
inline LcpInstance parseLcpInstance(std::istream& in, const std::string& source = "<input>") {
    detail::TokenReader reader(in, source);
    Matrix a = detail::parseMatrixBody(reader);
    if (!a.isSquare())
        throw ParseError(source, reader.lastLine(), 1, "LCP instance requires a square matrix");
    auto qLine = reader.nextLine();
    if (!qLine)
        throw ParseError(source, reader.lastLine() + 1, 1, "expected q line after the matrix");
    if (qLine->size() != a.rows())
        throw ParseError(source, (*qLine)[0].line, (*qLine)[0].column,
                         "expected " + std::to_string(a.rows()) + " q entries");
    Vector q(a.rows());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = detail::parseEntry(reader, (*qLine)[i]);
    if (auto extra = reader.next())
        throw ParseError(source, extra->line, extra->column, "unexpected trailing content");
    return LcpInstance{std::move(a), std::move(q)};
}

// Sequence format: line "nMin nMax", then the nMax-nMin+1 coefficients,
// whitespace-separated (line breaks allowed).
inline RationalSequence parseSequence(std::istream& in, const std::string& source = "<input>") {
    detail::TokenReader reader(in, source);
    auto header = reader.nextLine();
    if (!header || header->size() != 2)
        throw ParseError(source, header ? (*header)[0].line : reader.lastLine() + 1, 1,
                         "expected header line 'nMin nMax'");
    const long lo = detail::parseCount(reader, (*header)[0], "range start");
    const long hi = detail::parseCount(reader, (*header)[1], "range end");
    if (hi < lo)
        throw ParseError(source, (*header)[0].line, (*header)[0].column, "empty sequence range");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long i = lo; i <= hi; ++i) {
        auto tok = reader.next();
        if (!tok)
            throw ParseError(source, reader.lastLine() + 1, 1,
                             "expected " + std::to_string(hi - lo + 1) + " coefficients, found " +
                                 std::to_string(coeffs.size()));
        coeffs.push_back(detail::parseEntry(reader, *tok));
    }
    if (auto extra = reader.next())
        throw ParseError(source, extra->line, extra->column, "unexpected trailing content");
    return RationalSequence(static_cast<int>(lo), static_cast<int>(hi), std::move(coeffs));
}

inline void writeMatrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << toString(m(i, j));
        }
        out << '\n';
    }
}

inline Matrix readMatrixFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parseMatrix(in, path);
}

inline LcpInstance readLcpInstanceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parseLcpInstance(in, path);
}

inline RationalSequence readSequenceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parseSequence(in, path);
}

} // namespace totalpos
