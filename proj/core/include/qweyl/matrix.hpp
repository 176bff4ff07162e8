#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/polynomial.hpp"
#include "qweyl/rational.hpp"

namespace qweyl {

// Dense row-major matrix over an exact coefficient ring (Rational or
// Polynomial).  Shapes are checked at runtime; mismatches throw shape_error.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T()) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw shape_error("ragged initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T())) return false;
        return true;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? T(1) : T()))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = T() - v;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw shape_error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.data_) v = s * v;
        return m;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v = s * v;
        return *this;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
        if (i0 + h > rows_ || j0 + w > cols_) throw shape_error("block out of range");
        Matrix r(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
            throw shape_error("block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
    Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw shape_error("hstack row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        r.set_block(0, 0, a);
        r.set_block(0, a.cols_, b);
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw shape_error("vstack column mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        r.set_block(0, 0, a);
        r.set_block(a.rows_, 0, b);
        return r;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
        if (cols.empty()) return Matrix();
        Matrix r(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != r.rows_) throw shape_error("ragged column list");
            for (std::size_t i = 0; i < r.rows_; ++i) r(i, j) = cols[j][i];
        }
        return r;
    }

    std::vector<T> column_vector(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? " [" : "[");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? ", " : "") << entry_str((*this)(i, j));
            os << "]" << (i + 1 < rows_ ? "\n" : "");
        }
        os << "]";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        return os << m.str();
    }

private:
    static std::string entry_str(const Rational& v) { return v.str(); }
    static std::string entry_str(const Polynomial& v) { return v.str(); }

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw shape_error("matrix index out of range");
    }
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw shape_error("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

// Lift a rational matrix to a constant polynomial matrix.
inline PolyMatrix promote(const RatMatrix& m) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Polynomial(m(i, j));
    return r;
}

inline RatMatrix evaluate(const PolyMatrix& m, const Rational& x) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j)(x);
    return r;
}

// Substitute x -> s*x in every entry.
inline PolyMatrix scale_arg(const PolyMatrix& m, const Rational& s) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).scale_arg(s);
    return r;
}

inline RatMatrix coefficient_of(const PolyMatrix& m, int k) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(k);
    return r;
}

inline int degree(const PolyMatrix& m) {
    int d = -1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d = std::max(d, m(i, j).degree());
    return d;
}

}  // namespace qweyl
