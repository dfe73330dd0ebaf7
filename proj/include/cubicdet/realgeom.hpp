#pragma once

// Real structure on a cubic surface with real coefficients: kinds of lines,
// Segre types, self-conjugate double-sixes, self-adjoint representations and
// their definiteness.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicdet/detrep.hpp"

namespace cubicdet {

class TableMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class NotSelfConjugate : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class LineKind { Real, FirstKind, SecondKind };
std::string to_string(LineKind k);

template <FieldType K>
struct LineKindResult {
    LineKind kind;
    /// The real point l meets its conjugate in, for FirstKind.
    std::optional<PointP3<K>> point;
};

template <FieldType K>
LineH<K> conj_line(const LineH<K>& l) {
    return l.conj();
}
template <FieldType K>
LinearPencil<K> conj_pencil(const LinearPencil<K>& m) {
    return m.conj();
}

template <FieldType K>
LineKindResult<K> line_kind(const LineH<K>& l);

enum class SegreType { F1, F2, F3, F4, F5 };
std::string to_string(SegreType t);

struct SegreResult {
    SegreType type;
    int real = 0;
    int first = 0;
    int second = 0;
};

template <FieldType K>
SegreResult segre_type(const LineConfiguration<K>& cfg);

/// Index of the conjugate of every line; throws TableMismatch if the
/// configuration is not closed under conjugation.
template <FieldType K>
std::array<std::size_t, kLineCount> conjugation_map(const LineConfiguration<K>& cfg);

enum class DoubleSixKind { I, II, III, IV };
std::string to_string(DoubleSixKind k);

struct ConjugateDoubleSix {
    DoubleSix ds;
    DoubleSixKind kind;
    /// lower[i] = conj(upper[permutation[i]]); an involution.
    std::array<std::size_t, 6> permutation;
};

/// Double-sixes with {b_1..b_6} = {conj a_1, .., conj a_6}, in catalog order.
template <FieldType K>
std::vector<ConjugateDoubleSix> self_conjugate_double_sixes(const LineConfiguration<K>& cfg);

template <FieldType K>
struct SelfAdjointRep {
    /// U with U_j = U_j^* for every coefficient matrix.
    LinearPencil<K> pencil;
    /// The double-six whose upper row gives the lines of U.
    DoubleSix ds;
    /// Construction trace: R* = X R Y, A = X R = gamma A*, U = mu A.
    EquivalenceWitness<K> witness;
    K gamma;
    K mu;
};

template <FieldType K>
SelfAdjointRep<K> selfadjoint_from_double_six(const LineConfiguration<K>& cfg, const DoubleSix& ds,
                                              const Form<K>& f);

/// Two representatives (ds and its swap) per self-conjugate double-six.
template <FieldType K>
std::vector<SelfAdjointRep<K>> selfadjoint_classes(const LineConfiguration<K>& cfg, const Form<K>& f);

enum class HermiteanRelation { Plus, Minus, No };
std::string to_string(HermiteanRelation r);

template <FieldType K>
struct HermiteanEquivalence {
    HermiteanRelation relation = HermiteanRelation::No;
    /// U2 = k X U1 X^*, with k = +1 or -1 whenever sqrt|k| exists in the field.
    Matrix<K> X;
    K k;
};

template <FieldType K>
HermiteanEquivalence<K> hermitean_equivalent(const LinearPencil<K>& u1, const LinearPencil<K>& u2,
                                             const LineConfiguration<K>& cfg);

struct SelfOrthogonalResult {
    std::vector<std::vector<cplx>> vectors;
    /// False when some homotopy path failed and nothing was found.
    bool conclusive = true;
    std::string diagnostics;
};

/// Nonzero h with h^* U_j h = 0 for all j, up to scale: coordinate vectors are
/// tested exactly, then the charts (1, h1, h2) and (0, 1, h2) are solved as
/// real quadratic systems.
template <FieldType K>
SelfOrthogonalResult self_orthogonal_vectors(const LinearPencil<K>& u, std::uint64_t seed = 1);

struct DefinitenessOptions {
    std::size_t directions = 256;
    std::size_t steps = 50;
    std::size_t dual_starts = 64;
    std::size_t dual_steps = 200;
    std::uint64_t seed = 1;
};

enum class Verdict { Definite, Indefinite, Unknown };
enum class Certificate { None, PositiveCombination, SelfOrthogonalVector, NegativeE2Gram, DualPsdWitness };
std::string to_string(Verdict v);
std::string to_string(Certificate c);

struct DefinitenessResult {
    Verdict verdict = Verdict::Unknown;
    Certificate certificate = Certificate::None;
    /// Definite: sum c_j U_j has all eigenvalues >= margin (c of unit norm).
    std::array<double, 4> c{};
    double margin = 0.0;
    std::vector<cplx> h;
    Eigen::Matrix4d e2_gram = Eigen::Matrix4d::Zero();
    /// Hermitian Z >= 0 of trace 1 with tr(U_j Z) = 0 for all j.
    CMat z;
    double z_min_eigenvalue = 0.0;
    std::string diagnostics;
};

/// Real symmetric G with e2(U(z)) = z^T G z for real z, where e2 is the sum of
/// the principal 2x2 minors.
template <FieldType K>
Eigen::Matrix4d e2_gram(const LinearPencil<K>& u);

template <FieldType K>
DefinitenessResult is_definite(const LinearPencil<K>& u, const DefinitenessOptions& opts = {});

/// Coefficient matrices as complex matrices; with hermitize the average of U
/// and U^* is used.
template <FieldType K>
std::array<CMat, 4> complex_coefficients(const LinearPencil<K>& u, bool hermitize = false);

}  // namespace cubicdet
