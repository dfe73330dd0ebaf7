#pragma once

// Linear determinantal representations F = det M(z) of a cubic surface.
//
// A pencil M has six base points P_1..P_6 in the plane: the points where the
// matrix L(x) with M(z) x = L(x) z drops rank. Each base point gives a line
// {z : M(z) P_i = 0} on the surface, and two pencils are equivalent
// (M' = X M Y) iff they give the same six lines.

#include <array>
#include <optional>

#include "cubicdet/lineconfig.hpp"
#include "cubicdet/numeric.hpp"
#include "cubicdet/pencil.hpp"

namespace cubicdet {

class IdentityUnsolvable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class SolveFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class IrreducibilityViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class NonIntegerGenus : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Zero-diagonal pencil [[0, p12, p13], [p21, 0, p23], [p31, p32, 0]] with
/// p_ij the plane through b_i and a_j, scaled so that det = F exactly.
template <FieldType K>
struct RFormRep {
    LinearPencil<K> pencil;
    /// a1..a3 = ds.upper[0..2] (columns), b1..b3 = ds.lower[0..2] (rows).
    DoubleSix ds;
    /// F = s (p12 p23 p31 + lambda p13 p21 p32) before scaling; the pencil
    /// holds s * p12 and s * lambda * p13. Floating point pencils are then
    /// rebalanced by positive row and column factors of product 1.
    K s;
    K lambda;

    PlaneH<K> pi(std::size_t i, std::size_t j) const { return pencil.entry(i, j); }
};

template <FieldType K>
struct EquivalenceWitness {
    Matrix<K> X;
    Matrix<K> Y;
};

template <FieldType K>
RFormRep<K> rform_from_double_six(const LineConfiguration<K>& cfg, const DoubleSix& ds, const Form<K>& f);

/// The 3x4 matrix of linear forms in z whose rows are the rows of M(z) x.
template <FieldType K>
Matrix<K> forms_at_point(const LinearPencil<K>& m, const PointP2<K>& x);

/// Line {z : M(z) x = 0} for a base point x.
template <FieldType K>
LineH<K> line_of_base_point(const LinearPencil<K>& m, const PointP2<K>& x);

/// The base point whose line is l, if l is one of the lines of M.
template <FieldType K>
std::optional<PointP2<K>> base_point_for_line(const LinearPencil<K>& m, const LineH<K>& l);

/// Base points found numerically from the minors of L(x). For exact fields
/// the points are reconstructed and verified exactly; SolveFailure if that is
/// not possible. Order: sorted by their numeric values.
template <FieldType K>
std::array<PointP2<K>, 6> base_points(const LinearPencil<K>& m, std::uint64_t seed = 1);

/// Base points located through the lines of a known configuration, in
/// increasing order of line index.
template <FieldType K>
std::array<PointP2<K>, 6> base_points(const LinearPencil<K>& m, const LineConfiguration<K>& cfg);

/// Indices (increasing) of the six lines of M in cfg.
template <FieldType K>
std::array<std::size_t, 6> rep_line_indices(const LinearPencil<K>& m, const LineConfiguration<K>& cfg);

template <FieldType K>
std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>& m, const std::array<PointP2<K>, 6>& points);

template <FieldType K>
std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>& m);

template <FieldType K>
struct Reduction {
    EquivalenceWitness<K> witness;
    RFormRep<K> rform;
};

/// X m1 Y = m2; in floating point up to a residual relative to |X| |m1| |Y|.
template <FieldType K>
bool witness_holds(const LinearPencil<K>& m1, const LinearPencil<K>& m2, const EquivalenceWitness<K>& w);

/// Constructive reduction X M Y = R to the zero-diagonal form of the
/// double-six containing the lines of M. With a target the result is that
/// exact pencil (its a1..a3 must be lines of M).
template <FieldType K>
Reduction<K> reduce_to_rform(const LinearPencil<K>& m, const LineConfiguration<K>& cfg,
                             const std::optional<RFormRep<K>>& target = std::nullopt);

/// Equal line sets, found numerically (exact for exact fields).
template <FieldType K>
bool equivalent(const LinearPencil<K>& m1, const LinearPencil<K>& m2);

template <FieldType K>
bool equivalent(const LinearPencil<K>& m1, const LinearPencil<K>& m2, const LineConfiguration<K>& cfg);

/// X, Y with X m1 Y = m2 when the two pencils are equivalent.
template <FieldType K>
std::optional<EquivalenceWitness<K>> equivalence_witness(const LinearPencil<K>& m1, const LinearPencil<K>& m2,
                                                         const LineConfiguration<K>& cfg);

template <FieldType K>
using AdjugateMatrix = std::array<std::array<Form<K>, 3>, 3>;

/// Transposed cofactor matrix, checked against M adj = det(M) Id.
template <FieldType K>
AdjugateMatrix<K> adjugate(const LinearPencil<K>& m);

/// Rank of the adjugate at a point, computed in floating point.
template <FieldType K>
std::size_t adjugate_rank_at(const AdjugateMatrix<K>& adj, const std::vector<cplx>& z, double tol = 1e-8);

/// Points of F = 0 on random lines (roots of the restricted cubic).
template <FieldType K>
std::vector<std::vector<cplx>> surface_sample_points(const Form<K>& f, std::size_t count, std::uint64_t seed);

struct DivisorClass {
    int alpha = 0;
    std::array<int, 6> beta{};
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

int divisor_degree(const DivisorClass& d);
int divisor_genus(const DivisorClass& d);
/// All classes of degree 3 and arithmetic genus 0, sorted.
std::vector<DivisorClass> enumerate_72_classes();
/// Sorted (descending) beta multiset of a class.
std::array<int, 6> beta_pattern(const DivisorClass& d);

template <FieldType K>
struct TwistedCubicSystem {
    /// columns[k][i] = adjugate entry (i, k)
    std::array<std::array<Form<K>, 3>, 3> columns;
    DivisorClass divisor_class;
};

template <FieldType K>
TwistedCubicSystem<K> twisted_cubic_system(const LinearPencil<K>& m);

template <FieldType K>
struct DegenerateTwistedCubic {
    std::size_t i;
    std::size_t j;
    /// Lines b_i, b_j, c_ij (indices into the configuration).
    std::array<std::size_t, 3> lines;
    /// Combination of the adjugate columns vanishing on the three lines.
    Vec<K> combination;
};

/// The 15 reducible members b_i + b_j + c_ij of the twisted cubic system,
/// with a_1..a_6 the lines of M in base point order and b_i their partners.
template <FieldType K>
std::vector<DegenerateTwistedCubic<K>> degenerate_twisted_cubics(const LinearPencil<K>& m,
                                                                 const LineConfiguration<K>& cfg);

/// One representative per skew six: for each double-six in catalog order the
/// pencil from (upper | lower) and from (lower | upper).
template <FieldType K>
std::vector<RFormRep<K>> all_representations(const LineConfiguration<K>& cfg, const Form<K>& f);

}  // namespace cubicdet
