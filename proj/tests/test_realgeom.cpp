#include <doctest.h>

#include "cubicdet/builtins.hpp"
#include "cubicdet/realgeom.hpp"
#include "test_util.hpp"

using namespace cubicdet;

namespace {

const LineConfiguration<Eisenstein>& fermat_config() {
    static const LineConfiguration<Eisenstein> cfg = twenty_seven_lines(fermat_blowup());
    return cfg;
}

}  // namespace

TEST_CASE("Conjugation and line kinds") {
    auto l = eisenstein_line("1w00/0011");
    CHECK(conj_line(l) == eisenstein_line("1W00/0011"));
    CHECK(conj_line(conj_line(l)) == l);
    CHECK(conj_line(eisenstein_line("1100/0011")) == eisenstein_line("1100/0011"));
    CHECK(conj_pencil(conj_pencil(fermat_pencil_eq6())) == fermat_pencil_eq6());
    CHECK(line_kind(eisenstein_line("1100/0011")).kind == LineKind::Real);
    auto k = line_kind(l);
    CHECK(k.kind == LineKind::FirstKind);
    REQUIRE(k.point);
    CHECK(projectively_equal(*k.point, PointP3<Eisenstein>{0, 0, 1, -1}));
    CHECK(line_kind(eisenstein_line("1w00/001w")).kind == LineKind::SecondKind);
}

TEST_CASE("Fermat real structure") {
    const auto& cfg = fermat_config();
    auto s = segre_type(cfg);
    CHECK(s.type == SegreType::F4);
    CHECK(s.real == 3);
    CHECK(s.first == 12);
    CHECK(s.second == 12);
    auto sc = self_conjugate_double_sixes(cfg);
    REQUIRE(sc.size() == 3);
    for (const auto& c : sc) CHECK(c.kind == DoubleSixKind::III);
    // the double-six induced by M' and its transpose is among them
    auto mp = fermat_pencil_prime();
    auto up = rep_line_indices(mp, cfg);
    bool found = false;
    for (const auto& c : sc) {
        auto u = c.ds.upper, l = c.ds.lower;
        std::sort(u.begin(), u.end());
        std::sort(l.begin(), l.end());
        if (u == up || l == up) found = true;
    }
    CHECK(found);
}

TEST_CASE("Fermat self-adjoint classes") {
    const auto& cfg = fermat_config();
    auto classes = selfadjoint_classes(cfg, cfg.surface);
    REQUIRE(classes.size() == 6);
    for (const auto& u : classes) {
        CHECK(u.pencil.is_self_adjoint());
        CHECK(projectively_equal(det_pencil(u.pencil), cfg.surface));
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) {
            auto h = hermitean_equivalent(classes[i].pencil, classes[j].pencil, cfg);
            CHECK((h.relation != HermiteanRelation::No) == (i == j));
        }
    auto u1 = example_u1();
    CHECK(u1.is_self_adjoint());
    CHECK(example_u2().is_self_adjoint());
    std::size_t matches = 0;
    for (const auto& u : classes)
        if (hermitean_equivalent(u.pencil, u1, cfg).relation != HermiteanRelation::No) ++matches;
    CHECK(matches == 1);
}

TEST_CASE("Hermitean equivalence of the two printed representations") {
    const auto& cfg = fermat_config();
    auto u1 = example_u1();
    auto u2 = example_u2();
    auto h = hermitean_equivalent(u1, u2, cfg);
    CHECK(h.relation == HermiteanRelation::Plus);
    CHECK(u1.transformed(h.X, h.X.adjoint()).scaled(h.k) == u2);
    auto self = hermitean_equivalent(u1, u1, cfg);
    CHECK(self.relation == HermiteanRelation::Plus);
    CHECK(u1.transformed(self.X, self.X.adjoint()).scaled(self.k) == u1);
    // the printed witness
    auto w = Eisenstein::omega();
    auto w2 = w * w;
    Matrix<Eisenstein> p{{1, -w2, -1}, {0, w2, 0}, {0, 0, w}};
    CHECK(u2.transformed(p, p.adjoint()) == u1);
}

TEST_CASE("Self-orthogonal vector of the Fermat representation") {
    auto so = self_orthogonal_vectors(example_u1());
    REQUIRE_FALSE(so.vectors.empty());
    bool e1 = false;
    for (const auto& h : so.vectors)
        if (std::abs(h[1]) < 1e-9 && std::abs(h[2]) < 1e-9) e1 = true;
    CHECK(e1);
    auto r = is_definite(example_u1());
    CHECK(r.verdict == Verdict::Indefinite);
    CHECK(r.certificate == Certificate::SelfOrthogonalVector);
}
