#include "cubicdet/pencil.hpp"

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

template <FieldType K>
LinearPencil<K>::LinearPencil(std::array<Matrix<K>, 4> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& m : coeffs_)
        if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("LinearPencil: coefficients must be 3x3");
}

template <FieldType K>
LinearPencil<K> LinearPencil<K>::from_entries(const std::array<std::array<PlaneH<K>, 3>, 3>& entries) {
    LinearPencil p;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) p.set_entry(i, k, entries[i][k]);
    return p;
}

template <FieldType K>
PlaneH<K> LinearPencil<K>::entry(std::size_t i, std::size_t k) const {
    PlaneH<K> f(4);
    for (std::size_t j = 0; j < 4; ++j) f[j] = coeffs_[j](i, k);
    return f;
}

template <FieldType K>
void LinearPencil<K>::set_entry(std::size_t i, std::size_t k, const PlaneH<K>& form) {
    if (form.size() != 4) throw std::invalid_argument("LinearPencil: entry must have 4 coefficients");
    for (std::size_t j = 0; j < 4; ++j) coeffs_[j](i, k) = form[j];
}

template <FieldType K>
Matrix<K> LinearPencil<K>::at(const PointP3<K>& z) const {
    Matrix<K> out(3, 3);
    for (std::size_t j = 0; j < 4; ++j) out = out + z[j] * coeffs_[j];
    return out;
}

template <FieldType K>
LinearPencil<K> LinearPencil<K>::transpose() const {
    std::array<Matrix<K>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = coeffs_[j].transpose();
    return LinearPencil(c);
}

template <FieldType K>
LinearPencil<K> LinearPencil<K>::conj() const {
    std::array<Matrix<K>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = coeffs_[j].conj();
    return LinearPencil(c);
}

template <FieldType K>
LinearPencil<K> LinearPencil<K>::transformed(const Matrix<K>& x, const Matrix<K>& y) const {
    std::array<Matrix<K>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = x * coeffs_[j] * y;
    return LinearPencil(c);
}

template <FieldType K>
LinearPencil<K> LinearPencil<K>::scaled(const K& s) const {
    std::array<Matrix<K>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = s * coeffs_[j];
    return LinearPencil(c);
}

template <FieldType K>
bool LinearPencil<K>::is_zero_diagonal() const {
    for (std::size_t i = 0; i < 3; ++i)
        if (!is_zero_vector(entry(i, i))) return false;
    return true;
}

template <FieldType K>
Form<K> det_pencil(const LinearPencil<K>& m) {
    auto e = [&](std::size_t i, std::size_t k) { return m.entry_form(i, k); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

#define CUBICDET_INSTANTIATE_PENCIL(K) \
    template class LinearPencil<K>;    \
    template Form<K> det_pencil(const LinearPencil<K>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_PENCIL)

}  // namespace cubicdet
