#pragma once

// Cubic surfaces as blow-ups of six points of P^2.
//
// Conventions:
//   - plane cubics are Form<K>(3 vars, degree 3) in x0, x1, x2;
//   - L is a 3x4 matrix of linear forms in x; its maximal minors satisfy
//       (-1)^j det(L without column j) = c_L * F_j,   j = 0..3;
//   - the pencil M is read off M(z) x = L(x) z, i.e. M_j(i, k) = coefficient
//     of x_k in L(i, j).

#include <array>
#include <optional>

#include "cubicdet/lineconfig.hpp"
#include "cubicdet/pencil.hpp"

namespace cubicdet {

class DegeneratePoints : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class ResolutionFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class DegenerateSurface : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Basis of the cubics through six points in general position.
template <FieldType K>
std::vector<Form<K>> cubic_system_through(const std::array<PointP2<K>, 6>& points);

template <FieldType K>
struct HilbertBurchL {
    /// entries[i][j] = coefficients of a linear form in x0, x1, x2.
    std::array<std::array<Vec<K>, 4>, 3> entries;
    /// Common factor: signed minor j equals minor_factor * F_j.
    K minor_factor;

    Matrix<K> at(const PointP2<K>& x) const;
    /// (-1)^j det(L without column j), as plane cubics.
    std::array<Form<K>, 4> signed_minors() const;
};

template <FieldType K>
HilbertBurchL<K> hilbert_burch(const std::vector<Form<K>>& cubics);

template <FieldType K>
LinearPencil<K> pencil_from_L(const HilbertBurchL<K>& l);

/// Inverse of pencil_from_L (without the minor factor).
template <FieldType K>
HilbertBurchL<K> L_from_pencil(const LinearPencil<K>& m);

template <FieldType K>
struct BlowupSurface {
    std::array<PointP2<K>, 6> points;
    std::vector<Form<K>> cubics;
    HilbertBurchL<K> L;
    LinearPencil<K> M;
    /// Defining cubic, normalized (first nonzero coefficient 1 for exact fields).
    Form<K> F;
    /// det M = c * F
    K c;

    /// Image of a plane point under the cubic map x -> (F_1(x) : ... : F_4(x)).
    PointP3<K> image(const PointP2<K>& x) const;
};

/// Builds the surface from six points. When basis is given it is used as
/// F_1..F_4 (it must span the cubics through the points).
template <FieldType K>
BlowupSurface<K> make_blowup(const std::array<PointP2<K>, 6>& points,
                             const std::optional<std::vector<Form<K>>>& basis = std::nullopt);

/// Same, with a given matrix L whose signed minors become F_1..F_4.
template <FieldType K>
BlowupSurface<K> make_blowup_from_L(const std::array<PointP2<K>, 6>& points, const HilbertBurchL<K>& l);

/// Labeled 27 lines (a_i, b_j, c_ij) of a blow-up.
template <FieldType K>
LineConfiguration<K> twenty_seven_lines(const BlowupSurface<K>& s);

struct SmoothnessResult {
    bool smooth = false;
    /// 1 for exact fields; for floats the ratio of the smallest to the
    /// largest singular value of the degree-5 Macaulay matrix.
    double confidence = 1.0;
    std::size_t rank = 0;
};

/// The four partials have no common projective zero iff their degree-5
/// Macaulay matrix (80 x 56) has full column rank.
template <FieldType K>
SmoothnessResult smoothness_detail(const Form<K>& f);

template <FieldType K>
bool smoothness_check(const Form<K>& f) {
    return smoothness_detail(f).smooth;
}

/// Scales a form so that its first nonzero coefficient is 1 (exact) or to
/// unit norm with a real positive largest coefficient (float).
template <FieldType K>
Form<K> normalize_form(const Form<K>& f);

/// Cubic form vanishing on the given points, when unique up to scale.
template <FieldType K>
std::optional<Form<K>> implicit_cubic(const std::vector<PointP3<K>>& points);

}  // namespace cubicdet
