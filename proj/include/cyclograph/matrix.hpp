#ifndef CYCLOGRAPH_MATRIX_HPP
#define CYCLOGRAPH_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"

namespace cyclograph {

/// Dense row-major matrix; sized for desk-scale graphs, not for speed.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Submatrix on the given row and column index lists.
    Matrix sub(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
        Matrix m(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline bool is_zero_entry(const CycloNum& x) { return x.is_zero(); }
inline bool is_zero_entry(const Rational& x) { return x.is_zero(); }
inline bool is_one_entry(const CycloNum& x) { return x.is_one(); }
inline bool is_one_entry(const Rational& x) { return x.is_one(); }

/// Conjugate transpose over the cyclotomic field.
inline Matrix<CycloNum> conjugate_transpose(const Matrix<CycloNum>& m) {
    Matrix<CycloNum> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
    return t;
}

/*
 * Bareiss fraction-free elimination.
 *
 * After step k every entry of the trailing block equals a (k+1)-minor of the
 * input, so the division by the previous pivot is exact; over a field that is
 * a multiplication by its inverse, computed once per step. The 0×0
 * determinant is 1.
 */
template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_entry(m(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero_entry(m(r, k))) ++r;
            if (r == n) return T(0);
            m.swap_rows(k, r);
            negate = !negate;
        }
        const bool unit_prev = is_one_entry(prev);
        const T inv_prev = unit_prev ? T(1) : T(1) / prev;
        const T& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T& lead = m(i, k);
            const bool lead_zero = is_zero_entry(lead);
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = pivot * m(i, j);
                if (!lead_zero && !is_zero_entry(m(k, j))) v -= lead * m(k, j);
                m(i, j) = unit_prev ? std::move(v) : v * inv_prev;
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Exact inverse by Gauss-Jordan elimination; throws DivisionByZero if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.is_square()) throw Error(ErrorCode::SizeMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && is_zero_entry(m(r, k))) ++r;
        if (r == n) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
        m.swap_rows(k, r);
        inv.swap_rows(k, r);
        const T p = T(1) / m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) * p;
            inv(k, j) = inv(k, j) * p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero_entry(m(i, k))) continue;
            const T f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Complex embedding of an exact matrix.
inline Matrix<std::complex<double>> to_complex(const Matrix<CycloNum>& m) {
    Matrix<std::complex<double>> c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).to_complex();
    return c;
}

/// Floating LU determinant with partial pivoting; a diagnostic cross-check only.
inline std::complex<double> numeric_determinant(Matrix<std::complex<double>> m) {
    if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
        if (std::abs(m(piv, k)) == 0.0) return 0.0;
        if (piv != k) {
            m.swap_rows(k, piv);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::complex<double> f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

inline std::complex<double> numeric_determinant(const Matrix<CycloNum>& m) { return numeric_determinant(to_complex(m)); }

}  // namespace cyclograph

#endif  // CYCLOGRAPH_MATRIX_HPP
