#pragma once

// Randomized property checks shared by the unit tests and the acceptance run.

#include <functional>
#include <sstream>
#include <string>

#include "cubicdet/builtins.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/numeric.hpp"
#include "cubicdet/realgeom.hpp"
#include "cubicdet/surface.hpp"

namespace cubicdet::props {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void fail(std::size_t k, const std::string& what) {
        if (failures++ == 0) first_failure = "case " + std::to_string(k) + ": " + what;
    }
};

inline Rational random_rational(Rng& rng) {
    const long n = static_cast<long>(rng.next() % 101) - 50;
    const long d = static_cast<long>(rng.next() % 20) + 1;
    return {n, d};
}

template <FieldType K>
K random_scalar(Rng& rng) {
    if constexpr (std::is_same_v<K, Rational>) return random_rational(rng);
    if constexpr (std::is_same_v<K, Gaussian>) return Gaussian(random_rational(rng), random_rational(rng));
    if constexpr (std::is_same_v<K, Eisenstein>) return Eisenstein(random_rational(rng), random_rational(rng));
    if constexpr (std::is_same_v<K, ComplexFloat>) return ComplexFloat(rng.complex_normal());
}

template <FieldType K>
std::string field_axiom_violation(Rng& rng) {
    const K a = random_scalar<K>(rng), b = random_scalar<K>(rng), c = random_scalar<K>(rng);
    const K zero(0), one(1);
    if (!((a + b) + c == a + (b + c))) return "additive associativity";
    if (!((a * b) * c == a * (b * c))) return "multiplicative associativity";
    if (!(a + b == b + a) || !(a * b == b * a)) return "commutativity";
    if (!(a * (b + c) == a * b + a * c)) return "distributivity";
    if (!(a + zero == a) || !(a * one == a)) return "identities";
    if (!(a - a).is_zero() || !(a + (-a)).is_zero()) return "additive inverse";
    if (!a.is_zero() && !(a * (one / a) == one)) return "multiplicative inverse";
    if (!(b.is_zero() || (a / b) * b == a)) return "division";
    return {};
}

template <FieldType K>
std::string conj_violation(Rng& rng) {
    const K a = random_scalar<K>(rng), b = random_scalar<K>(rng);
    if (!(a.conj().conj() == a)) return "conj is not an involution";
    if (!((a + b).conj() == a.conj() + b.conj())) return "conj is not additive";
    if (!((a * b).conj() == a.conj() * b.conj())) return "conj is not multiplicative";
    if (!(a.conj() == a) && a.is_real()) return "real value moved by conj";
    return {};
}

/// Field axioms on random triples in every field.
inline Outcome field_axioms(std::size_t cases, std::uint64_t seed) {
    Outcome out;
    Rng rng(seed);
    for (std::size_t k = 0; k < cases; ++k, ++out.cases) {
        for (const auto& v : {field_axiom_violation<Rational>(rng), field_axiom_violation<Gaussian>(rng),
                              field_axiom_violation<Eisenstein>(rng), field_axiom_violation<ComplexFloat>(rng)})
            if (!v.empty()) out.fail(k, v);
    }
    return out;
}

/// conj(conj x) = x on scalars, lines and pencils, and conj is a field automorphism.
inline Outcome conj_involution(std::size_t cases, std::uint64_t seed) {
    Outcome out;
    Rng rng(seed);
    for (std::size_t k = 0; k < cases; ++k, ++out.cases) {
        for (const auto& v : {conj_violation<Rational>(rng), conj_violation<Gaussian>(rng),
                              conj_violation<Eisenstein>(rng), conj_violation<ComplexFloat>(rng)})
            if (!v.empty()) out.fail(k, v);
        PlaneH<Eisenstein> p, q;
        for (std::size_t i = 0; i < 4; ++i) {
            p.push_back(random_scalar<Eisenstein>(rng));
            q.push_back(random_scalar<Eisenstein>(rng));
        }
        try {
            LineH<Eisenstein> l(p, q);
            if (!(conj_line(conj_line(l)) == l)) out.fail(k, "line conjugation is not an involution");
        } catch (const std::exception&) {
        }
        std::array<Matrix<Gaussian>, 4> c;
        for (auto& m : c) {
            m = Matrix<Gaussian>(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_scalar<Gaussian>(rng);
        }
        LinearPencil<Gaussian> pencil(c);
        if (!(conj_pencil(conj_pencil(pencil)) == pencil)) out.fail(k, "pencil conjugation is not an involution");
        if (!(pencil.adjoint().adjoint() == pencil)) out.fail(k, "adjoint is not an involution");
    }
    return out;
}

/// Blow-ups of random rational six-point sets: the 27 lines have a symmetric
/// incidence graph in which every line meets exactly ten others. Point sets
/// that are not in general position are redrawn.
inline Outcome incidence_graphs(std::size_t cases, std::uint64_t seed) {
    Outcome out;
    Rng rng(seed);
    auto coord = [&] { return Rational(static_cast<long>(rng.next() % 11) - 5); };
    while (out.cases < cases) {
        std::array<PointP2<Rational>, 6> pts;
        for (auto& p : pts) p = {coord(), coord(), coord()};
        LineConfiguration<Rational> cfg;
        try {
            cfg = twenty_seven_lines(make_blowup(pts));
        } catch (const DegeneratePoints&) {
            continue;
        } catch (const DegenerateSurface&) {
            continue;
        }
        const std::size_t k = out.cases++;
        if (cfg.lines.size() != kLineCount) {
            out.fail(k, "wrong line count");
            continue;
        }
        const auto inc = incidence_graph(cfg.lines);
        if (inc != cfg.incidence) out.fail(k, "stored incidence differs from the recomputed one");
        for (std::size_t i = 0; i < kLineCount; ++i) {
            int degree = 0;
            if (inc[i][i]) out.fail(k, "a line meets itself");
            for (std::size_t j = 0; j < kLineCount; ++j) {
                if (inc[i][j] != inc[j][i]) out.fail(k, "asymmetric incidence");
                degree += inc[i][j] ? 1 : 0;
            }
            if (degree != 10) out.fail(k, line_label(i) + " meets " + std::to_string(degree) + " lines");
        }
    }
    return out;
}

inline Matrix<Eisenstein> random_invertible_eisenstein(Rng& rng) {
    for (;;) {
        Matrix<Eisenstein> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = Eisenstein(Rational(static_cast<long>(rng.next() % 5) - 2),
                                     Rational(static_cast<long>(rng.next() % 5) - 2));
        if (rank(m) == 3) return m;
    }
}

/// Reflexivity, symmetry and transitivity of equivalence on triples of
/// randomly transformed Fermat representatives, and agreement with the
/// known class of each member.
inline Outcome equivalence_laws(std::size_t cases, std::uint64_t seed) {
    Outcome out;
    Rng rng(seed);
    const auto cfg = twenty_seven_lines(fermat_blowup());
    const auto reps = all_representations(cfg, cfg.surface);
    for (std::size_t k = 0; k < cases; ++k, ++out.cases) {
        const std::size_t base = rng.next() % reps.size();
        std::array<std::size_t, 3> idx{};
        std::array<LinearPencil<Eisenstein>, 3> m;
        for (std::size_t t = 0; t < 3; ++t) {
            idx[t] = rng.next() % 2 == 0 ? base : rng.next() % reps.size();
            m[t] = reps[idx[t]].pencil.transformed(random_invertible_eisenstein(rng), random_invertible_eisenstein(rng));
        }
        std::array<std::array<bool, 3>, 3> e{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) e[i][j] = equivalent(m[i], m[j], cfg);
        for (std::size_t i = 0; i < 3; ++i) {
            if (!e[i][i]) out.fail(k, "not reflexive");
            for (std::size_t j = 0; j < 3; ++j) {
                if (e[i][j] != e[j][i]) out.fail(k, "not symmetric");
                if (e[i][j] != (idx[i] == idx[j])) out.fail(k, "disagrees with the class labels");
                for (std::size_t l = 0; l < 3; ++l)
                    if (e[i][j] && e[j][l] && !e[i][l]) out.fail(k, "not transitive");
            }
        }
    }
    return out;
}

/// Seeded routines return identical results when rerun with the same seed.
inline Outcome seed_determinism(std::size_t cases, std::uint64_t seed) {
    Outcome out;
    const auto f = fermat_form<Eisenstein>();
    const auto m = fermat_blowup().M;
    for (std::size_t k = 0; k < cases; ++k, ++out.cases) {
        const std::uint64_t s = seed + k;
        Rng a(s), b(s);
        for (int t = 0; t < 8; ++t)
            if (a.next() != b.next() || a.normal() != b.normal()) out.fail(k, "random stream differs");
        if (surface_sample_points(f, 2, s) != surface_sample_points(f, 2, s)) out.fail(k, "sample points differ");
        const auto p1 = base_points(m, s), p2 = base_points(m, s);
        for (std::size_t i = 0; i < 6; ++i)
            if (!(p1[i] == p2[i])) out.fail(k, "base points differ");
    }
    return out;
}

struct Suite {
    const char* name;
    std::function<Outcome(std::size_t, std::uint64_t)> run;
};

inline std::vector<Suite> all_suites() {
    return {{"conj involution", conj_involution},
            {"field axioms", field_axioms},
            {"incidence symmetry and degree 10", incidence_graphs},
            {"equivalence relation laws", equivalence_laws},
            {"seed determinism", seed_determinism}};
}

}  // namespace cubicdet::props
