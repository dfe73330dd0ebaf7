#include "cubicdet/realgeom.hpp"

#include <algorithm>
#include <set>

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

std::string to_string(LineKind k) {
    switch (k) {
        case LineKind::Real: return "real";
        case LineKind::FirstKind: return "first_kind";
        case LineKind::SecondKind: return "second_kind";
    }
    return "?";
}

std::string to_string(SegreType t) { return "F" + std::to_string(static_cast<int>(t) + 1); }

std::string to_string(DoubleSixKind k) {
    static const char* names[] = {"I", "II", "III", "IV"};
    return names[static_cast<int>(k)];
}

std::string to_string(HermiteanRelation r) {
    switch (r) {
        case HermiteanRelation::Plus: return "plus";
        case HermiteanRelation::Minus: return "minus";
        case HermiteanRelation::No: return "no";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Definite: return "definite";
        case Verdict::Indefinite: return "indefinite";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::None: return "none";
        case Certificate::PositiveCombination: return "positive_combination";
        case Certificate::SelfOrthogonalVector: return "self_orthogonal_vector";
        case Certificate::NegativeE2Gram: return "negative_e2_gram";
        case Certificate::DualPsdWitness: return "dual_psd_witness";
    }
    return "?";
}

template <FieldType K>
LineKindResult<K> line_kind(const LineH<K>& l) {
    const auto& f = l.forms();
    const auto g = f.conj();
    Matrix<K> s = Matrix<K>::from_rows({f.row(0), f.row(1), g.row(0), g.row(1)});
    switch (rank(s)) {
        case 2: return {LineKind::Real, std::nullopt};
        case 3: {
            auto ker = nullspace(s);
            Vec<K> p = ker.front();
            if constexpr (K::exact) {
                p = normalize_projective(p);
            } else {
                std::size_t piv = 0;
                for (std::size_t i = 1; i < p.size(); ++i)
                    if (p[i].magnitude() > p[piv].magnitude()) piv = i;
                K s0 = p[piv];
                for (auto& x : p) x = x / s0;
            }
            return {LineKind::FirstKind, p};
        }
        default: return {LineKind::SecondKind, std::nullopt};
    }
}

template <FieldType K>
SegreResult segre_type(const LineConfiguration<K>& cfg) {
    SegreResult r{SegreType::F1};
    for (const auto& l : cfg.lines) {
        switch (line_kind(l).kind) {
            case LineKind::Real: ++r.real; break;
            case LineKind::FirstKind: ++r.first; break;
            case LineKind::SecondKind: ++r.second; break;
        }
    }
    static const std::array<std::array<int, 3>, 5> table = {
        {{27, 0, 0}, {15, 0, 12}, {7, 4, 16}, {3, 12, 12}, {3, 24, 0}}};
    for (std::size_t t = 0; t < 5; ++t)
        if (table[t] == std::array<int, 3>{r.real, r.first, r.second}) {
            r.type = static_cast<SegreType>(t);
            return r;
        }
    throw TableMismatch("segre_type: counts " + std::to_string(r.real) + "/" + std::to_string(r.first) + "/" +
                        std::to_string(r.second) + " match no Segre type");
}

template <FieldType K>
std::array<std::size_t, kLineCount> conjugation_map(const LineConfiguration<K>& cfg) {
    std::array<std::size_t, kLineCount> out{};
    for (std::size_t n = 0; n < kLineCount; ++n) {
        LineH<K> c = cfg.lines[n].conj();
        std::size_t found = static_cast<std::size_t>(-1);
        if constexpr (K::exact) {
            found = find_line(cfg, c);
        } else {
            double best = 1e-6;
            for (std::size_t m = 0; m < kLineCount; ++m) {
                double d = line_distance(cfg.lines[m], c);
                if (d < best) {
                    best = d;
                    found = m;
                }
            }
        }
        if (found == static_cast<std::size_t>(-1))
            throw TableMismatch("conjugation_map: conjugate of " + line_label(n) + " is not a line of the surface");
        out[n] = found;
    }
    return out;
}

template <FieldType K>
std::vector<ConjugateDoubleSix> self_conjugate_double_sixes(const LineConfiguration<K>& cfg) {
    auto conj = conjugation_map(cfg);
    std::vector<ConjugateDoubleSix> out;
    for (const auto& ds : double_sixes(cfg)) {
        ConjugateDoubleSix c{ds, DoubleSixKind::I, {}};
        bool ok = true;
        for (std::size_t i = 0; i < 6 && ok; ++i) {
            auto it = std::find_if(ds.upper.begin(), ds.upper.end(),
                                   [&](std::size_t u) { return conj[u] == ds.lower[i]; });
            if (it == ds.upper.end())
                ok = false;
            else
                c.permutation[i] = static_cast<std::size_t>(it - ds.upper.begin());
        }
        if (!ok) continue;
        std::size_t moved = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            if (c.permutation[c.permutation[i]] != i) throw TableMismatch("self-conjugate double-six is not an involution");
            if (c.permutation[i] != i) ++moved;
        }
        c.kind = static_cast<DoubleSixKind>(moved / 2);
        out.push_back(c);
    }
    return out;
}

namespace {

/// s with s * a == b; in floating point the least-squares s, accepted when
/// the residual is small relative to |b|.
template <FieldType K>
std::optional<K> ratio(const std::vector<K>& a, const std::vector<K>& b) {
    if constexpr (!K::exact) {
        cplx num = 0.0;
        double den = 0.0, nb = 0.0, tol = kDefaultTolerance;
        for (std::size_t i = 0; i < a.size(); ++i) {
            num += std::conj(a[i].value()) * b[i].value();
            den += std::norm(a[i].value());
            nb += std::norm(b[i].value());
            tol = std::max({tol, a[i].tol(), b[i].tol()});
        }
        if (den == 0.0 || nb == 0.0) return std::nullopt;
        cplx s = num / den;
        double res = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) res += std::norm(s * a[i].value() - b[i].value());
        if (std::sqrt(res) > tol * std::sqrt(nb)) return std::nullopt;
        return K(s);
    } else {
        std::size_t piv = a.size();
        double best = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero() && a[i].magnitude() > best) {
                best = a[i].magnitude();
                piv = i;
            }
        if (piv == a.size()) return std::nullopt;
        K s = b[piv] / a[piv];
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(s * a[i] == b[i])) return std::nullopt;
        return s;
    }
}

template <FieldType K>
std::vector<K> flatten(const LinearPencil<K>& m);

/// det m = c f with c != 0; in floating point the residual is measured
/// against |m|^3, the size of the terms that cancel in the determinant.
template <FieldType K>
bool det_is_multiple(const LinearPencil<K>& m, const Form<K>& f) {
    Form<K> d = det_pencil(m);
    if constexpr (K::exact) {
        return projectively_equal(d, f);
    } else {
        cplx num = 0.0;
        double den = 0.0, nd = 0.0, nm = 0.0;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            num += std::conj(f.coeffs()[i].value()) * d.coeffs()[i].value();
            den += std::norm(f.coeffs()[i].value());
            nd += std::norm(d.coeffs()[i].value());
        }
        for (const auto& x : flatten(m)) nm += std::norm(x.value());
        if (den == 0.0 || nd == 0.0) return false;
        cplx c = num / den;
        double res = 0.0;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            res += std::norm(c * f.coeffs()[i].value() - d.coeffs()[i].value());
        return std::sqrt(res) <= kDefaultTolerance * std::max(std::sqrt(nd), std::pow(nm, 1.5));
    }
}

template <FieldType K>
std::vector<K> flatten(const LinearPencil<K>& m) {
    std::vector<K> out;
    for (std::size_t j = 0; j < 4; ++j)
        for (const auto& x : m.coeff(j).data()) out.push_back(x);
    return out;
}

template <FieldType K>
std::optional<K> real_sqrt(const K& k) {
    if constexpr (std::is_same_v<K, Rational>) {
        return k.exact_sqrt();
    } else if constexpr (std::is_same_v<K, Gaussian>) {
        if (!k.is_real()) return std::nullopt;
        auto r = k.re().exact_sqrt();
        if (!r) return std::nullopt;
        return K(*r);
    } else if constexpr (std::is_same_v<K, Eisenstein>) {
        if (!k.is_real()) return std::nullopt;
        auto r = k.a().exact_sqrt();
        if (!r) return std::nullopt;
        return K(*r);
    } else {
        double v = k.to_complex().real();
        if (v < 0.0) return std::nullopt;
        return K(std::sqrt(v), 0.0, k.tol());
    }
}

}  // namespace

template <FieldType K>
SelfAdjointRep<K> selfadjoint_from_double_six(const LineConfiguration<K>& cfg, const DoubleSix& ds,
                                              const Form<K>& f) {
    auto conj = conjugation_map(cfg);
    std::set<std::size_t> lower(ds.lower.begin(), ds.lower.end());
    std::set<std::size_t> conj_upper;
    for (std::size_t u : ds.upper) conj_upper.insert(conj[u]);
    if (lower != conj_upper) throw NotSelfConjugate("selfadjoint_from_double_six: double-six is not self-conjugate");
    auto r = rform_from_double_six(cfg, ds, f);
    LinearPencil<K> rstar = r.pencil.adjoint();
    auto w = equivalence_witness(r.pencil, rstar, cfg);
    if (!w) throw NotSelfConjugate("selfadjoint_from_double_six: R* is not equivalent to R");
    SelfAdjointRep<K> out;
    out.ds = ds;
    out.witness = *w;
    LinearPencil<K> a = r.pencil.transformed(w->X, Matrix<K>::identity(3));
    if constexpr (!K::exact) {
        double n = 0.0;
        for (const auto& x : flatten(a)) n += std::norm(x.value());
        K t(1.0 / std::sqrt(n), 0.0);
        out.witness.X = t * out.witness.X;
        out.witness.Y = (K(1) / t) * out.witness.Y;
        a = a.scaled(t);
    }
    auto gamma = ratio(flatten(a.adjoint()), flatten(a));
    if (!gamma) throw NotSelfConjugate("selfadjoint_from_double_six: X R is not a multiple of its adjoint");
    out.gamma = *gamma;
    out.mu = K(1) + gamma->conj();
    if (out.mu.is_zero()) {
        if constexpr (requires { K::imaginary_unit(); })
            out.mu = K::imaginary_unit();
        else
            throw NotSelfConjugate("selfadjoint_from_double_six: needs an imaginary unit");
    }
    out.pencil = a.scaled(out.mu);
    if constexpr (!K::exact) {
        // rounding leaves a small anti-hermitian part, measured against |U|
        auto u = flatten(out.pencil);
        auto us = flatten(out.pencil.adjoint());
        double diff = 0.0, n = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            diff += std::norm(u[i].value() - us[i].value());
            n += std::norm(u[i].value());
        }
        if (std::sqrt(diff) > kDefaultTolerance * 10.0 * std::sqrt(n))
            throw NotSelfConjugate("selfadjoint_from_double_six: result is not self-adjoint");
        std::array<Matrix<K>, 4> h;
        for (std::size_t j = 0; j < 4; ++j) {
            h[j] = out.pencil.coeff(j);
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 3; ++q)
                    h[j](p, q) = K(0.5 * (out.pencil.coeff(j)(p, q).value() + std::conj(out.pencil.coeff(j)(q, p).value())));
        }
        out.pencil = LinearPencil<K>(h);
    }
    if (!out.pencil.is_self_adjoint()) throw NotSelfConjugate("selfadjoint_from_double_six: result is not self-adjoint");
    if (!det_is_multiple(out.pencil, f))
        throw NotSelfConjugate("selfadjoint_from_double_six: determinant is not a multiple of F");
    return out;
}

template <FieldType K>
std::vector<SelfAdjointRep<K>> selfadjoint_classes(const LineConfiguration<K>& cfg, const Form<K>& f) {
    std::vector<SelfAdjointRep<K>> out;
    for (const auto& c : self_conjugate_double_sixes(cfg)) {
        out.push_back(selfadjoint_from_double_six(cfg, c.ds, f));
        out.push_back(selfadjoint_from_double_six(cfg, c.ds.swapped(), f));
    }
    return out;
}

template <FieldType K>
HermiteanEquivalence<K> hermitean_equivalent(const LinearPencil<K>& u1, const LinearPencil<K>& u2,
                                             const LineConfiguration<K>& cfg) {
    HermiteanEquivalence<K> out;
    auto w = equivalence_witness(u1, u2, cfg);
    if (!w) return out;
    auto k = ratio(w->X.adjoint().data(), w->Y.data());
    if (!k || !k->is_real()) throw std::logic_error("hermitean_equivalent: Y is not a real multiple of X*");
    out.X = w->X;
    out.k = *k;
    const double sign = k->to_complex().real();
    out.relation = sign > 0.0 ? HermiteanRelation::Plus : HermiteanRelation::Minus;
    K abs_k = sign > 0.0 ? *k : -*k;
    if (auto s = real_sqrt(abs_k)) {
        out.X = *s * out.X;
        out.k = sign > 0.0 ? K(1) : K(-1);
    }
    if (!(u1.transformed(out.X, out.X.adjoint()).scaled(out.k) == u2))
        throw std::logic_error("hermitean_equivalent: witness check failed");
    return out;
}

template <FieldType K>
std::array<CMat, 4> complex_coefficients(const LinearPencil<K>& u, bool hermitize) {
    std::array<CMat, 4> out;
    for (std::size_t j = 0; j < 4; ++j) {
        CMat m(3, 3);
        for (Eigen::Index a = 0; a < 3; ++a)
            for (Eigen::Index b = 0; b < 3; ++b)
                m(a, b) = u.coeff(j)(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).to_complex();
        out[j] = hermitize ? CMat(0.5 * (m + m.adjoint())) : m;
    }
    return out;
}

namespace {

std::vector<Eigen::MatrixXd> chart_quadrics(const std::array<CMat, 4>& u, const CMat& a) {
    std::vector<Eigen::MatrixXd> out;
    for (const auto& m : u) {
        CMat q = a.adjoint() * m * a;
        Eigen::MatrixXd r = q.real();
        out.push_back(0.5 * (r + r.transpose()));
    }
    return out;
}

bool add_unique(std::vector<std::vector<cplx>>& list, std::vector<cplx> h) {
    Eigen::Index piv = 0;
    Eigen::Map<CVec> v(h.data(), 3);
    v.cwiseAbs().maxCoeff(&piv);
    v /= v(piv);
    for (auto& g : list) {
        Eigen::Map<CVec> w(g.data(), 3);
        Eigen::Index p2 = 0;
        CVec wn = w;
        wn.cwiseAbs().maxCoeff(&p2);
        wn /= wn(p2);
        if ((wn - v).norm() < 1e-6) return false;
    }
    list.push_back(std::move(h));
    return true;
}

}  // namespace

template <FieldType K>
SelfOrthogonalResult self_orthogonal_vectors(const LinearPencil<K>& u, std::uint64_t seed) {
    SelfOrthogonalResult out;
    for (std::size_t k = 0; k < 3; ++k) {
        bool zero = true;
        for (std::size_t j = 0; j < 4; ++j)
            if (!u.coeff(j)(k, k).is_zero()) zero = false;
        if (zero) {
            std::vector<cplx> e(3, 0.0);
            e[k] = 1.0;
            add_unique(out.vectors, e);
        }
    }
    auto cu = complex_coefficients(u, true);
    const cplx i(0.0, 1.0);
    Rng rng(seed);
    // chart h = (1, x1 + i y1, x2 + i y2)
    CMat a1 = CMat::Zero(3, 5);
    a1(0, 0) = 1.0;
    a1(1, 1) = 1.0;
    a1(1, 2) = i;
    a1(2, 3) = 1.0;
    a1(2, 4) = i;
    // chart h = (0, 1, x2 + i y2)
    CMat a2 = CMat::Zero(3, 3);
    a2(1, 0) = 1.0;
    a2(2, 1) = 1.0;
    a2(2, 2) = i;
    std::size_t failed = 0, paths = 0, infinite = 0;
    for (const CMat* a : {&a1, &a2}) {
        auto res = real_quadratic_solutions(chart_quadrics(cu, *a), rng.split(paths));
        paths += res.paths;
        failed += res.failed;
        infinite += res.at_infinity;
        for (const auto& v : res.real_solutions) {
            Eigen::VectorXd w(v.size() + 1);
            w << 1.0, v;
            CVec h = *a * w.cast<cplx>();
            add_unique(out.vectors, std::vector<cplx>(h.data(), h.data() + 3));
        }
    }
    out.conclusive = failed == 0 || !out.vectors.empty();
    out.diagnostics = std::to_string(paths) + " homotopy paths, " + std::to_string(infinite) + " at infinity, " +
                      std::to_string(failed) + " failed";
    return out;
}

template <FieldType K>
Eigen::Matrix4d e2_gram(const LinearPencil<K>& u) {
    auto c = complex_coefficients(u, true);
    Eigen::Matrix4d g;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            cplx s = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    s += c[static_cast<std::size_t>(j)](a, a) * c[static_cast<std::size_t>(k)](b, b) -
                         c[static_cast<std::size_t>(j)](a, b) * c[static_cast<std::size_t>(k)](b, a);
            g(j, k) = s.real();
        }
    return 0.5 * (g + g.transpose());
}

namespace {

struct MinEig {
    double value;
    CVec vector;
};

MinEig min_eig(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

}  // namespace

namespace {

CMat combine(const std::array<CMat, 4>& cu, const Eigen::Vector4d& c) {
    CMat a = CMat::Zero(3, 3);
    for (int j = 0; j < 4; ++j) a += c(j) * cu[static_cast<std::size_t>(j)];
    return a;
}

struct Ascent {
    double best = -std::numeric_limits<double>::infinity();
    Eigen::Vector4d c = Eigen::Vector4d::Zero();
};

/// Subgradient ascent of the smallest eigenvalue of sum c_j U_j over unit c;
/// stops early once the value exceeds stop.
Ascent ascend(const std::array<CMat, 4>& cu, const DefinitenessOptions& opts, Rng& rng, double stop) {
    Ascent out;
    for (std::size_t d = 0; d < opts.directions && out.best <= stop; ++d) {
        Eigen::Vector4d c;
        for (int j = 0; j < 4; ++j) c(j) = rng.normal();
        c.normalize();
        for (std::size_t s = 0; s < opts.steps; ++s) {
            auto e = min_eig(combine(cu, c));
            if (e.value > out.best) {
                out.best = e.value;
                out.c = c;
            }
            Eigen::Vector4d g;
            for (int j = 0; j < 4; ++j)
                g(j) = (e.vector.adjoint() * cu[static_cast<std::size_t>(j)] * e.vector)(0).real();
            if (g.norm() == 0.0) break;
            c += (0.5 / std::sqrt(static_cast<double>(s) + 1.0)) * g / g.norm();
            c.normalize();
        }
    }
    return out;
}

double pencil_scale(const std::array<CMat, 4>& cu) {
    double scale = 0.0;
    for (const auto& m : cu) scale = std::max(scale, m.norm());
    return scale;
}

/// P with P^* A P of eigenvalues +-1 (tiny eigenvalues are floored).
CMat congruence_for(const CMat& a) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a);
    Eigen::VectorXd d = es.eigenvalues().cwiseAbs();
    const double floor = 1e-12 * std::max(d.maxCoeff(), 1e-300);
    CMat p = es.eigenvectors();
    for (int k = 0; k < 3; ++k) p.col(k) /= std::sqrt(std::max(d(k), floor));
    return p;
}

}  // namespace

template <FieldType K>
DefinitenessResult is_definite(const LinearPencil<K>& u, const DefinitenessOptions& opts) {
    DefinitenessResult out;
    auto cu0 = complex_coefficients(u, true);
    const double scale0 = pencil_scale(cu0);
    if (scale0 == 0.0) {
        out.diagnostics = "zero pencil";
        return out;
    }
    std::string diag;

    // (1) coordinate vectors with vanishing diagonal entries, checked exactly
    for (std::size_t k = 0; k < 3; ++k) {
        bool zero = true;
        for (std::size_t j = 0; j < 4; ++j)
            if (!u.coeff(j)(k, k).is_zero()) zero = false;
        if (zero) {
            out.verdict = Verdict::Indefinite;
            out.certificate = Certificate::SelfOrthogonalVector;
            out.h.assign(3, 0.0);
            out.h[k] = 1.0;
            out.diagnostics = "coordinate vector e" + std::to_string(k + 1) + " is self-orthogonal";
            return out;
        }
    }

    // (2) ascent on the smallest eigenvalue of sum c_j U_j over unit c, on
    // pencils P^* U_j P rescaled by congruences built from the best combination
    Rng rng(opts.seed);
    std::array<CMat, 4> cu = cu0;
    CMat p_total = CMat::Identity(3, 3);
    Ascent asc;
    const int rounds = 4;
    for (int round = 0; round < rounds; ++round) {
        const double scale = pencil_scale(cu);
        for (auto& m : cu) m /= scale;
        asc = ascend(cu, opts, rng, 1e-7);
        diag += "round " + std::to_string(round + 1) + " best smallest eigenvalue " + std::to_string(asc.best) +
                " (relative); ";
        if (asc.best > 1e-7) {
            double original = min_eig(combine(cu0, asc.c)).value;
            if (original > 0.0) {
                out.verdict = Verdict::Definite;
                out.certificate = Certificate::PositiveCombination;
                for (int j = 0; j < 4; ++j) out.c[static_cast<std::size_t>(j)] = asc.c(j);
                out.margin = original;
                out.diagnostics = diag;
                return out;
            }
        }
        if (round + 1 == rounds) break;
        CMat p = congruence_for(combine(cu, asc.c));
        for (auto& m : cu) m = CMat(p.adjoint() * m * p);
        p_total = p_total * p;
    }

    // (3) self-orthogonal vectors of the rescaled pencil, mapped back by P
    {
        std::array<Matrix<ComplexFloat>, 4> pm;
        for (std::size_t j = 0; j < 4; ++j) {
            pm[j] = Matrix<ComplexFloat>(3, 3);
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    pm[j](a, b) = ComplexFloat(0.5 * (cu[j](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +
                                                      std::conj(cu[j](static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)))));
        }
        auto so = self_orthogonal_vectors(LinearPencil<ComplexFloat>(pm), opts.seed);
        diag += "self-orthogonal search: " + so.diagnostics + "; ";
        if (!so.vectors.empty()) {
            CVec h = p_total * Eigen::Map<const CVec>(so.vectors.front().data(), 3);
            Eigen::Index piv = 0;
            h.cwiseAbs().maxCoeff(&piv);
            h /= h(piv);
            out.verdict = Verdict::Indefinite;
            out.certificate = Certificate::SelfOrthogonalVector;
            out.h.assign(h.data(), h.data() + 3);
            out.diagnostics = diag;
            return out;
        }
        if (!so.conclusive) diag += "self-orthogonal search inconclusive; ";
    }

    // (4) second elementary symmetric function of the eigenvalues
    out.e2_gram = e2_gram(u);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> ge(out.e2_gram);
    if (ge.eigenvalues().maxCoeff() <= 1e-9 * std::max(1.0, out.e2_gram.norm())) {
        out.verdict = Verdict::Indefinite;
        out.certificate = Certificate::NegativeE2Gram;
        out.diagnostics = diag;
        return out;
    }

    // (5) dual witness: Z >= 0, tr Z = 1, tr(U_j Z) = 0, searched for the
    // rescaled pencil and mapped back as P Z P^*
    std::vector<CMat> basis;
    for (int a = 0; a < 3; ++a) {
        CMat e = CMat::Zero(3, 3);
        e(a, a) = 1.0;
        basis.push_back(e);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            CMat e = CMat::Zero(3, 3);
            e(a, b) = e(b, a) = 1.0;
            basis.push_back(e);
            CMat f = CMat::Zero(3, 3);
            f(a, b) = cplx(0.0, 1.0);
            f(b, a) = cplx(0.0, -1.0);
            basis.push_back(f);
        }
    Eigen::MatrixXd cons(5, 9);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(5);
    rhs(0) = 1.0;
    for (int k = 0; k < 9; ++k) {
        cons(0, k) = basis[static_cast<std::size_t>(k)].trace().real();
        for (int j = 0; j < 4; ++j)
            cons(j + 1, k) = (cu[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(k)]).trace().real();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cons, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd x0 = svd.solve(rhs);
    if ((cons * x0 - rhs).norm() < 1e-9) {
        const auto& sv = svd.singularValues();
        Eigen::Index r = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > 1e-10 * sv(0)) ++r;
        Eigen::MatrixXd null = svd.matrixV().rightCols(9 - r);
        auto zmat = [&](const Eigen::VectorXd& x) {
            CMat z = CMat::Zero(3, 3);
            for (int k = 0; k < 9; ++k) z += x(k) * basis[static_cast<std::size_t>(k)];
            return z;
        };
        double zbest = -std::numeric_limits<double>::infinity();
        Eigen::VectorXd xbest = x0;
        for (std::size_t st = 0; st < opts.dual_starts && zbest <= 1e-7; ++st) {
            Eigen::VectorXd y(null.cols());
            for (Eigen::Index k = 0; k < y.size(); ++k) y(k) = st == 0 ? 0.0 : rng.normal();
            for (std::size_t s = 0; s < opts.dual_steps; ++s) {
                Eigen::VectorXd x = x0 + null * y;
                auto e = min_eig(zmat(x));
                if (e.value > zbest) {
                    zbest = e.value;
                    xbest = x;
                }
                Eigen::VectorXd gx(9);
                for (int k = 0; k < 9; ++k)
                    gx(k) = (e.vector.adjoint() * basis[static_cast<std::size_t>(k)] * e.vector)(0).real();
                Eigen::VectorXd gy = null.transpose() * gx;
                if (gy.norm() == 0.0) break;
                y += (0.5 / std::sqrt(static_cast<double>(s) + 1.0)) * gy / gy.norm();
            }
        }
        diag += "dual witness smallest eigenvalue " + std::to_string(zbest) + "; ";
        if (zbest > 1e-7) {
            CMat z = p_total * zmat(xbest) * p_total.adjoint();
            z /= z.trace().real();
            out.verdict = Verdict::Indefinite;
            out.certificate = Certificate::DualPsdWitness;
            out.z = z;
            out.z_min_eigenvalue = min_eig(z).value;
            out.diagnostics = diag;
            return out;
        }
    }
    out.diagnostics = diag + "budgets: " + std::to_string(rounds) + " rounds of " + std::to_string(opts.directions) +
                      " directions x " + std::to_string(opts.steps) + " steps, " + std::to_string(opts.dual_starts) +
                      " dual starts x " + std::to_string(opts.dual_steps) + " steps";
    return out;
}

#define CUBICDET_INSTANTIATE_REALGEOM(K)                                                                          \
    template LineKindResult<K> line_kind(const LineH<K>&);                                                       \
    template SegreResult segre_type(const LineConfiguration<K>&);                                                \
    template std::array<std::size_t, kLineCount> conjugation_map(const LineConfiguration<K>&);                    \
    template std::vector<ConjugateDoubleSix> self_conjugate_double_sixes(const LineConfiguration<K>&);           \
    template SelfAdjointRep<K> selfadjoint_from_double_six(const LineConfiguration<K>&, const DoubleSix&,        \
                                                           const Form<K>&);                                      \
    template std::vector<SelfAdjointRep<K>> selfadjoint_classes(const LineConfiguration<K>&, const Form<K>&);    \
    template HermiteanEquivalence<K> hermitean_equivalent(const LinearPencil<K>&, const LinearPencil<K>&,        \
                                                          const LineConfiguration<K>&);                          \
    template SelfOrthogonalResult self_orthogonal_vectors(const LinearPencil<K>&, std::uint64_t);                \
    template Eigen::Matrix4d e2_gram(const LinearPencil<K>&);                                                    \
    template DefinitenessResult is_definite(const LinearPencil<K>&, const DefinitenessOptions&);                 \
    template std::array<CMat, 4> complex_coefficients(const LinearPencil<K>&, bool);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_REALGEOM)

}  // namespace cubicdet
