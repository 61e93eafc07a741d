#pragma once

/// Dense matrices over an exact scalar field, with the exact linear
/// algebra the rest of the library leans on:
///
///   rank       fraction-free (Bareiss) elimination, first-nonzero pivot
///   char_poly  Faddeev-LeVerrier recurrence (exact in characteristic 0)
///   inverse    Gauss-Jordan over the field
///
/// Everything is exact; no floating point anywhere.

#include "matpoly/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matpoly {

template <typename S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, scalar_traits<S>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
        return a;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (is_zero_scalar(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const S& c, Matrix a) {
        for (auto& x : a.e_) x = c * x;
        return a;
    }

    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(unsigned e) const {
        if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
        Matrix r = identity(rows_);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    S trace() const {
        if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
        S t = scalar_traits<S>::zero();
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!is_zero_scalar(x)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !is_zero_scalar((*this)(i, j))) return false;
        return true;
    }

    /// Scalar multiple of the identity (the zero matrix counts).
    bool is_scalar() const {
        if (!is_square() || !is_diagonal()) return false;
        for (std::size_t i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return false;
        return true;
    }

    std::vector<S> diagonal() const {
        if (!is_square()) throw std::invalid_argument("diagonal of a non-square matrix");
        std::vector<S> d;
        d.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) d.push_back((*this)(i, i));
        return d;
    }

    /// Row-major flattening.
    const std::vector<S>& entries() const { return e_; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    static bool is_zero_scalar(const S& x) { return x.is_zero(); }

    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<S> e_;
};

/// Exact rank by fraction-free elimination. Pivot rule: scan columns left
/// to right, take the first row with a nonzero entry at or below the
/// current row (deterministic, reproducible).
template <typename S>
std::size_t rank(Matrix<S> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    S prev = scalar_traits<S>::one();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        if (pivot != r) m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = scalar_traits<S>::zero();
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

/// Exact characteristic polynomial det(λI - A), monic, lowest degree
/// first (coeffs[k] multiplies λ^k, coeffs[n] = 1). Faddeev-LeVerrier:
/// the integer divisions are exact over any field of characteristic 0.
template <typename S>
std::vector<S> char_poly(const Matrix<S>& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<S> coeffs(n + 1, scalar_traits<S>::zero());
    coeffs[n] = scalar_traits<S>::one();
    if (n == 0) return coeffs;
    Matrix<S> m = a;
    coeffs[n - 1] = -m.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        Matrix<S> shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
        m = a * shifted;
        coeffs[n - k] = -(m.trace() / scalar_traits<S>::from_rational(Rational(static_cast<long long>(k))));
    }
    return coeffs;
}

/// Exact inverse by Gauss-Jordan; throws std::domain_error when singular.
template <typename S>
Matrix<S> inverse(Matrix<S> m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> inv = Matrix<S>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { pivot = i; break; }
        if (pivot == n) throw std::domain_error("matrix is singular");
        if (pivot != c) {
            m.swap_rows(pivot, c);
            inv.swap_rows(pivot, c);
        }
        S d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = m(c, j) / d;
            inv(c, j) = inv(c, j) / d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            S f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Row-major vectorization, used to build differential matrices.
template <typename S>
std::vector<S> vec(const Matrix<S>& m) {
    return m.entries();
}

} // namespace matpoly
