#pragma once

// Small dense matrices over a field type and the handful of linear-algebra
// routines the geometry needs (echelon form, rank, kernels, solves).
//
// Exact fields use Gauss-Jordan elimination. ComplexFloat routes rank and
// kernel decisions through a singular value decomposition; a singular value
// counts as zero when it is below tol * sigma_max.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicdet/scalars.hpp"

namespace cubicdet {

template <FieldType K>
using Vec = std::vector<K>;

template <FieldType K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
    Matrix(std::initializer_list<std::initializer_list<K>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<K>>& cols) { return from_rows(cols).transpose(); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec<K> col(std::size_t j) const {
        Vec<K> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix conj() const {
        Matrix c(*this);
        for (auto& x : c.data_) x = x.conj();
        return c;
    }
    Matrix adjoint() const { return conj().transpose(); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in product");
        Vec<K> out(a.rows_, K(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend Matrix operator*(const K& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<K>& data() const { return data_; }

  private:
    void check_same(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <FieldType K>
struct RowEchelon {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Float entries below tol * max|a_ij| count as zero.
template <FieldType K>
RowEchelon<K> rref(Matrix<K> m);

template <FieldType K>
std::size_t rank(const Matrix<K>& m);

/// Basis of {v : m v = 0}. Exact fields give the canonical free-column basis;
/// floats give an orthonormal basis.
template <FieldType K>
std::vector<Vec<K>> nullspace(const Matrix<K>& m);

/// Basis of {w : w^T m = 0}.
template <FieldType K>
std::vector<Vec<K>> left_nullspace(const Matrix<K>& m) {
    return nullspace(m.transpose());
}

/// Solution of m x = b, or nullopt when inconsistent. Floats use least
/// squares and accept the result when the residual is within tolerance.
template <FieldType K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b);

template <FieldType K>
K determinant(const Matrix<K>& m);

/// Throws std::domain_error when singular.
template <FieldType K>
Matrix<K> inverse(const Matrix<K>& m);

/// Matrix with orthonormal-ish rows spanning the same row space (floats) or the
/// nonzero rows of the rref (exact). Used for canonical forms.
template <FieldType K>
Matrix<K> row_space_basis(const Matrix<K>& m);

/// Largest entry tolerance of a matrix (0 for exact fields).
template <FieldType K>
double matrix_tolerance(const Matrix<K>& m) {
    double tol = 0.0;
    if constexpr (!K::exact) {
        tol = kDefaultTolerance;
        for (const auto& x : m.data()) tol = std::max(tol, x.tol());
    }
    return tol;
}

/// Singular values of a complex approximation, descending.
std::vector<double> singular_values(const Matrix<ComplexFloat>& m);

template <FieldType K>
Matrix<ComplexFloat> to_complex_matrix(const Matrix<K>& m, double tol = kDefaultTolerance) {
    Matrix<ComplexFloat> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ComplexFloat(m(i, j).to_complex(), tol);
    return out;
}

/// Scales a vector so its first nonzero entry (exact) is one, or to unit
/// Euclidean norm with the largest entry real positive (floats).
template <FieldType K>
Vec<K> normalize_projective(Vec<K> v);

template <FieldType K>
bool is_zero_vector(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace cubicdet
