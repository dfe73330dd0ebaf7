#pragma once

// Points, planes and lines of P^2 and P^3.
//
// A line of P^3 is stored dually, by two independent linear forms (a 2x4
// coefficient matrix); equality of lines is equality of row spaces.

#include <optional>
#include <stdexcept>
#include <variant>

#include "cubicdet/matrix.hpp"

namespace cubicdet {

template <FieldType K>
using PointP2 = Vec<K>;
template <FieldType K>
using PointP3 = Vec<K>;
/// Coefficients (c0..c3) of the linear form c0 z0 + ... + c3 z3.
template <FieldType K>
using PlaneH = Vec<K>;

class GeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class DependentPlanes : public GeometryError {
  public:
    using GeometryError::GeometryError;
};
class NotConcurrent : public GeometryError {
  public:
    using GeometryError::GeometryError;
};

/// Equality up to a nonzero common scalar.
template <FieldType K>
bool projectively_equal(const Vec<K>& a, const Vec<K>& b);

template <FieldType K>
K dot(const Vec<K>& a, const Vec<K>& b) {
    K s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <FieldType K>
class LineH {
  public:
    LineH() = default;
    /// Throws DependentPlanes when the two forms are dependent.
    LineH(const PlaneH<K>& p, const PlaneH<K>& q);
    /// Line spanned by the rows of a rank-2 matrix of forms.
    static LineH from_form_matrix(const Matrix<K>& forms);
    static LineH through_points(const PointP3<K>& p, const PointP3<K>& q);

    /// Canonical 2x4 form matrix (reduced row echelon form).
    const Matrix<K>& forms() const { return forms_; }
    PlaneH<K> form(std::size_t i) const { return forms_.row(i); }
    /// Two points spanning the line.
    std::array<PointP3<K>, 2> points() const;
    bool contains(const PointP3<K>& p) const;
    /// A plane is through the line when its form is a combination of the two forms.
    bool lies_on(const PlaneH<K>& plane) const;
    LineH conj() const;

    friend bool operator==(const LineH& a, const LineH& b) { return a.equals(b); }

  private:
    bool equals(const LineH& o) const;
    Matrix<K> forms_;
};

struct Skew {};
struct EqualLines {};
template <FieldType K>
using MeetResult = std::variant<Skew, PointP3<K>, EqualLines>;

template <FieldType K>
LineH<K> line_from_planes(const PlaneH<K>& p, const PlaneH<K>& q) {
    return LineH<K>(p, q);
}

template <FieldType K>
MeetResult<K> lines_meet(const LineH<K>& l1, const LineH<K>& l2);

template <FieldType K>
bool meet_at_point(const LineH<K>& l1, const LineH<K>& l2) {
    return std::holds_alternative<PointP3<K>>(lines_meet(l1, l2));
}

/// Plane containing two concurrent lines; throws NotConcurrent otherwise.
template <FieldType K>
PlaneH<K> span_plane(const LineH<K>& l1, const LineH<K>& l2);

/// Distance between the row spaces of two float lines, measured as the
/// spectral norm of the difference of the orthogonal projectors.
double line_distance(const LineH<ComplexFloat>& a, const LineH<ComplexFloat>& b);

template <FieldType K>
LineH<ComplexFloat> to_complex_line(const LineH<K>& l, double tol = kDefaultTolerance) {
    return LineH<ComplexFloat>::from_form_matrix(to_complex_matrix(l.forms(), tol));
}

}  // namespace cubicdet
