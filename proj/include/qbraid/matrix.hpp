#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qbraid/errors.hpp"
#include "qbraid/scalar.hpp"

namespace qbraid {

template <class T> struct scalar_traits;

template <> struct scalar_traits<Complex> {
    static constexpr const char* backend = "complex";
    static bool is_zero(const Complex& x) { return x == Complex(0.0); }
    static double magnitude(const Complex& x) { return std::abs(x); }
};

template <> struct scalar_traits<LaurentPoly> {
    static constexpr const char* backend = "laurent";
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static double magnitude(const LaurentPoly& x) { return x.magnitude(); }
};

template <> struct scalar_traits<LambdaExt> {
    static constexpr const char* backend = "lambda";
    static bool is_zero(const LambdaExt& x) { return x.is_zero(); }
    static double magnitude(const LambdaExt& x) { return x.magnitude(); }
};

// Dense row-major matrix.  Products skip zero entries, which keeps the exact
// backends cheap on the very sparse braid matrices.
template <class T> class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!scalar_traits<T>::is_zero(o.data_[k])) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!scalar_traits<T>::is_zero(o.data_[k])) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const T& c, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        if (scalar_traits<T>::is_zero(c)) return r;
        for (std::size_t k = 0; k < m.data_.size(); ++k)
            if (!scalar_traits<T>::is_zero(m.data_[k])) r.data_[k] = c * m.data_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
        // nonzero pattern of b by rows
        std::vector<std::vector<std::size_t>> nz(b.rows_);
        for (std::size_t k = 0; k < b.rows_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!scalar_traits<T>::is_zero(b(k, j))) nz[k].push_back(j);
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (scalar_traits<T>::is_zero(x)) continue;
                for (std::size_t j : nz[k]) r(i, j) += x * b(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // sub-block of size (r x c) at (i0, j0)
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        Matrix b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    std::size_t nonzeros() const {
        return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(),
                                                      [](const T& x) { return !scalar_traits<T>::is_zero(x); }));
    }

    // largest entry magnitude; 0 exactly when every entry is zero
    double max_norm() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, scalar_traits<T>::magnitude(x));
        return m;
    }

    template <class F> auto map(F f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T> Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& x = a(i, j);
            if (scalar_traits<T>::is_zero(x)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const T& y = b(k, l);
                    if (!scalar_traits<T>::is_zero(y)) r(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return r;
}

template <class T> double residual(const Matrix<T>& a, const Matrix<T>& b) { return (a - b).max_norm(); }

inline Matrix<Complex> evaluate(const Matrix<LaurentPoly>& m, Complex s0) {
    return m.map([&](const LaurentPoly& p) { return evaluate(p, s0); });
}

inline Matrix<Complex> evaluate(const Matrix<LambdaExt>& m, Complex s0, Complex lambda0) {
    return m.map([&](const LambdaExt& x) { return evaluate(x, s0, lambda0); });
}

} // namespace qbraid
