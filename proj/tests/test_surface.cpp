#include <doctest.h>

#include "cubicdet/builtins.hpp"
#include "test_util.hpp"

using namespace cubicdet;

TEST_CASE("Fermat pencil from the resolution matrix") {
    auto s = fermat_blowup();
    auto w = Eisenstein::omega();
    LinearPencil<Eisenstein> expected = fermat_pencil_eq6();
    CHECK(s.M == expected);
    CHECK(projectively_equal(det_pencil(s.M), fermat_form<Eisenstein>()));
    CHECK(projectively_equal(s.F, fermat_form<Eisenstein>()));
    auto minors = s.L.signed_minors();
    for (const auto& p : s.points)
        for (const auto& m : minors) CHECK(m.evaluate(p).is_zero());
    (void)w;
}

TEST_CASE("Fermat 27 lines match the published list") {
    auto s = fermat_blowup();
    auto cfg = twenty_seven_lines(s);
    auto expected = fermat_paper_lines();
    REQUIRE(expected.size() == 27);
    for (const auto& l : expected) CHECK(find_line(cfg, l) != static_cast<std::size_t>(-1));
    CHECK(tritangent_planes(cfg).size() == 45);
    CHECK(double_sixes(cfg).size() == 36);
    CHECK(steiner_sets(cfg).size() == 120);
}

TEST_CASE("Generic rational blow-up") {
    std::array<PointP2<Rational>, 6> pts{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, -1, 4}}};
    auto s = make_blowup(pts);
    CHECK(projectively_equal(det_pencil(s.M), s.F));
    CHECK(smoothness_check(s.F));
    auto cfg = twenty_seven_lines(s);
    CHECK(cfg.lines.size() == 27);
    CHECK(double_sixes(cfg).size() == 36);
}

TEST_CASE("Degenerate point sets are rejected") {
    std::array<PointP2<Rational>, 6> collinear{{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {1, -1, 4}}};
    CHECK_THROWS_AS(cubic_system_through(collinear), DegeneratePoints);
    // six points on the conic x0 x1 = x2^2
    std::array<PointP2<Rational>, 6> conic{{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 4, 2}, {4, 1, 2}, {1, 9, 3}}};
    CHECK_THROWS_AS(cubic_system_through(conic), DegeneratePoints);
}

TEST_CASE("Smoothness") {
    CHECK(smoothness_check(fermat_form<Rational>()));
    CHECK(smoothness_check(clebsch_form<Rational>()));
    CHECK(smoothness_check(f5_form<Rational>()));
    auto z = [](std::size_t i) { return Form<Rational>::variable(4, i); };
    Form<Rational> cone = z(0) * z(0) * z(0) + z(1) * z(1) * z(1) + z(2) * z(2) * z(2);
    CHECK_FALSE(smoothness_check(cone));
    auto r = smoothness_detail(to_complex_form(fermat_form<Rational>()));
    CHECK(r.smooth);
    CHECK(r.confidence > 1e-3);
}
