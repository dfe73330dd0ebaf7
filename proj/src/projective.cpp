#include "cubicdet/projective.hpp"

#include <Eigen/Dense>

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

template <FieldType K>
bool projectively_equal(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) return false;
    if (is_zero_vector(a) || is_zero_vector(b)) return is_zero_vector(a) && is_zero_vector(b);
    if constexpr (K::exact) {
        return rank(Matrix<K>::from_rows({a, b})) == 1;
    } else {
        return rank(Matrix<K>::from_rows({normalize_projective(a), normalize_projective(b)})) == 1;
    }
}

template <FieldType K>
LineH<K>::LineH(const PlaneH<K>& p, const PlaneH<K>& q) {
    Matrix<K> m = Matrix<K>::from_rows({p, q});
    if (rank(m) != 2) throw DependentPlanes("line_from_planes: planes are dependent");
    // exact: reduced echelon form; float: orthonormal rows, which keeps
    // later rank decisions well scaled
    forms_ = row_space_basis(m);
}

template <FieldType K>
LineH<K> LineH<K>::from_form_matrix(const Matrix<K>& forms) {
    if (forms.cols() != 4) throw std::invalid_argument("LineH: forms must have 4 columns");
    if (rank(forms) != 2) throw DependentPlanes("LineH: form matrix does not have rank 2");
    Matrix<K> basis = row_space_basis(forms);
    return LineH(basis.row(0), basis.row(1));
}

template <FieldType K>
LineH<K> LineH<K>::through_points(const PointP3<K>& p, const PointP3<K>& q) {
    auto ker = nullspace(Matrix<K>::from_rows({p, q}));
    if (ker.size() != 2) throw GeometryError("LineH::through_points: points coincide");
    return LineH(ker[0], ker[1]);
}

template <FieldType K>
std::array<PointP3<K>, 2> LineH<K>::points() const {
    auto ker = nullspace(forms_);
    if (ker.size() != 2) throw GeometryError("LineH: degenerate form matrix");
    return {ker[0], ker[1]};
}

template <FieldType K>
bool LineH<K>::contains(const PointP3<K>& p) const {
    return is_zero_vector(forms_ * p);
}

template <FieldType K>
bool LineH<K>::lies_on(const PlaneH<K>& plane) const {
    return rank(Matrix<K>::from_rows({forms_.row(0), forms_.row(1), plane})) == 2;
}

template <FieldType K>
LineH<K> LineH<K>::conj() const {
    return from_form_matrix(forms_.conj());
}

template <FieldType K>
bool LineH<K>::equals(const LineH& o) const {
    if constexpr (K::exact) {
        return forms_ == o.forms_;
    } else {
        return rank(Matrix<K>::from_rows({forms_.row(0), forms_.row(1), o.forms_.row(0), o.forms_.row(1)})) == 2;
    }
}

template <FieldType K>
MeetResult<K> lines_meet(const LineH<K>& l1, const LineH<K>& l2) {
    Matrix<K> stacked = Matrix<K>::from_rows({l1.form(0), l1.form(1), l2.form(0), l2.form(1)});
    std::size_t r = rank(stacked);
    if (r == 4) return Skew{};
    if (r == 2) return EqualLines{};
    auto ker = nullspace(stacked);
    return normalize_projective(ker.front());
}

template <FieldType K>
PlaneH<K> span_plane(const LineH<K>& l1, const LineH<K>& l2) {
    if (!meet_at_point(l1, l2)) throw NotConcurrent("span_plane: lines are skew or equal");
    // u1 f1 + u2 f2 = v1 g1 + v2 g2
    Matrix<K> sys(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        sys(c, 0) = l1.forms()(0, c);
        sys(c, 1) = l1.forms()(1, c);
        sys(c, 2) = -l2.forms()(0, c);
        sys(c, 3) = -l2.forms()(1, c);
    }
    auto ker = nullspace(sys);
    if (ker.empty()) throw NotConcurrent("span_plane: no common plane");
    const auto& u = ker.front();
    PlaneH<K> plane(4, K(0));
    for (std::size_t c = 0; c < 4; ++c) plane[c] = u[0] * l1.forms()(0, c) + u[1] * l1.forms()(1, c);
    return normalize_projective(plane);
}

double line_distance(const LineH<ComplexFloat>& a, const LineH<ComplexFloat>& b) {
    auto projector = [](const LineH<ComplexFloat>& l) {
        Eigen::MatrixXcd f(2, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) f(i, j) = l.forms()(i, j).value();
        // orthonormal basis of the row space
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(f.adjoint());
        Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(4, 2);
        return Eigen::MatrixXcd(q * q.adjoint());
    };
    Eigen::MatrixXcd d = projector(a) - projector(b);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
    return svd.singularValues()(0);
}

#define CUBICDET_INSTANTIATE_PROJECTIVE(K)                                 \
    template bool projectively_equal(const Vec<K>&, const Vec<K>&);        \
    template class LineH<K>;                                               \
    template MeetResult<K> lines_meet(const LineH<K>&, const LineH<K>&);   \
    template PlaneH<K> span_plane(const LineH<K>&, const LineH<K>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_PROJECTIVE)

}  // namespace cubicdet
