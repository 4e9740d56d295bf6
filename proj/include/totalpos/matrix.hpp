#pragma once

#include "totalpos/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace totalpos {

using Vector = std::vector<Rational>;

// Dense rational matrix; the universal carrier for A, its windows and
// adjugates. Element access is 0-based; index *sets* (minors, windows,
// supports, certificates) are 1-based throughout the library, matching the
// paper convention [n] = {1,...,n}.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }

    Matrix(std::initializer_list<std::initializer_list<Rational>> init)
        : rows_(init.size()), cols_(init.begin() == init.end() ? 0 : init.begin()->size()) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("inconsistent row lengths");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Rational& at(std::size_t i, std::size_t j) {
        checkBounds(i, j);
        return (*this)(i, j);
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        checkBounds(i, j);
        return (*this)(i, j);
    }

    // Extracts the submatrix on 1-based, strictly increasing index sets.
    Matrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
        validateIndexSet(rowIdx, rows_);
        validateIndexSet(colIdx, cols_);
        Matrix out(rowIdx.size(), colIdx.size());
        for (std::size_t i = 0; i < rowIdx.size(); ++i)
            for (std::size_t j = 0; j < colIdx.size(); ++j)
                out(i, j) = (*this)(static_cast<std::size_t>(rowIdx[i]) - 1,
                                    static_cast<std::size_t>(colIdx[j]) - 1);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void checkBounds(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }

    static void validateIndexSet(const std::vector<int>& idx, std::size_t bound) {
        if (idx.empty()) throw std::invalid_argument("empty index set");
        int prev = 0;
        for (int v : idx) {
            if (v <= prev) throw std::invalid_argument("index set not strictly increasing");
            if (static_cast<std::size_t>(v) > bound) throw std::out_of_range("index out of range");
            prev = v;
        }
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// 1-based anchor of an r x r contiguous block.
struct IndexWindow {
    int rowStart = 1;
    int colStart = 1;
    int size = 1;

    std::vector<int> rowSet() const { return consecutive(rowStart); }
    std::vector<int> colSet() const { return consecutive(colStart); }

    friend bool operator==(const IndexWindow&, const IndexWindow&) = default;

private:
    std::vector<int> consecutive(int start) const {
        std::vector<int> out(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = start + i;
        return out;
    }
};

inline Matrix windowMatrix(const Matrix& a, const IndexWindow& w) {
    return a.submatrix(w.rowSet(), w.colSet());
}

inline Vector matVec(const Matrix& a, const Vector& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matrix/vector size mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = std::move(acc);
    }
    return y;
}

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline bool isZeroVector(const Vector& x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

inline Vector negate(Vector x) {
    for (auto& v : x) v = -v;
    return x;
}

// 1-based indices of the nonzero coordinates.
inline std::vector<int> supportOf(const Vector& x) {
    std::vector<int> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

} // namespace totalpos
