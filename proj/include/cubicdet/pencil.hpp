#pragma once

// 3x3 matrices of linear forms in z0..z3, stored as four constant
// coefficient matrices: M(z) = z0 M0 + z1 M1 + z2 M2 + z3 M3.

#include <array>

#include "cubicdet/forms.hpp"
#include "cubicdet/projective.hpp"

namespace cubicdet {

template <FieldType K>
class LinearPencil {
  public:
    LinearPencil() {
        for (auto& m : coeffs_) m = Matrix<K>(3, 3);
    }
    explicit LinearPencil(std::array<Matrix<K>, 4> coeffs);
    /// entries[i][j] holds the four coefficients of the (i, j) linear form.
    static LinearPencil from_entries(const std::array<std::array<PlaneH<K>, 3>, 3>& entries);

    const Matrix<K>& coeff(std::size_t j) const { return coeffs_[j]; }
    const std::array<Matrix<K>, 4>& coeffs() const { return coeffs_; }
    PlaneH<K> entry(std::size_t i, std::size_t k) const;
    void set_entry(std::size_t i, std::size_t k, const PlaneH<K>& form);
    Form<K> entry_form(std::size_t i, std::size_t k) const { return Form<K>::linear(entry(i, k)); }
    Matrix<K> at(const PointP3<K>& z) const;

    LinearPencil transpose() const;
    LinearPencil conj() const;
    LinearPencil adjoint() const { return conj().transpose(); }
    /// X * M * Y for constant matrices.
    LinearPencil transformed(const Matrix<K>& x, const Matrix<K>& y) const;
    LinearPencil scaled(const K& s) const;

    bool is_zero_diagonal() const;
    bool is_self_adjoint() const { return *this == adjoint(); }
    bool is_symmetric() const { return *this == transpose(); }

    friend bool operator==(const LinearPencil& a, const LinearPencil& b) { return a.coeffs_ == b.coeffs_; }

  private:
    std::array<Matrix<K>, 4> coeffs_;
};

/// Cofactor expansion of the 3x3 determinant; a cubic form in z0..z3.
template <FieldType K>
Form<K> det_pencil(const LinearPencil<K>& m);

template <FieldType K>
LinearPencil<ComplexFloat> to_complex_pencil(const LinearPencil<K>& m, double tol = kDefaultTolerance) {
    std::array<Matrix<ComplexFloat>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = to_complex_matrix(m.coeff(j), tol);
    return LinearPencil<ComplexFloat>(c);
}

}  // namespace cubicdet
