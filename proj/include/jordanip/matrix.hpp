#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over an exact field.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jordanip {

template <typename F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows * cols) throw std::invalid_argument("matrix: entry count mismatch");
    }
    /// Convenience for literal test matrices.
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("matrix: ragged rows");
            for (const auto& v : r) e_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<F>& entries() const { return e_; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!(v == F(0))) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.e_) v = -v;
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.e_) v = s * v;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matrix: vector shape mismatch");
        std::vector<F> r(a.rows_, F(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * x[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    F trace() const {
        if (!is_square()) throw std::invalid_argument("matrix: trace of non-square");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix pow(std::size_t k) const {
        if (!is_square()) throw std::invalid_argument("matrix: power of non-square");
        Matrix r = identity(rows_);
        for (std::size_t i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::vector<F> col(std::size_t j) const {
        std::vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<F> row(std::size_t i) const {
        std::vector<F> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix: shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<F> e_;
};

/// Kronecker product: block layout A[i][j] * B.
template <typename F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const F& aij = a(i, j);
            if (aij == F(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

/// Outer product x * (y transposed).
template <typename F>
Matrix<F> outer(const std::vector<F>& x, const std::vector<F>& y) {
    Matrix<F> r(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == F(0)) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * y[j];
    }
    return r;
}

template <typename F>
std::vector<F> operator*(const F& s, const std::vector<F>& x) {
    std::vector<F> r = x;
    for (auto& v : r) v = s * v;
    return r;
}

template <typename F>
std::vector<F> operator+(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: size mismatch");
    std::vector<F> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <typename F>
std::vector<F> operator-(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: size mismatch");
    std::vector<F> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace jordanip
