#include <doctest.h>

#include <map>
#include <set>

#include "cubicdet/builtins.hpp"
#include "cubicdet/detrep.hpp"
#include "test_util.hpp"

using namespace cubicdet;

namespace {

const LineConfiguration<Eisenstein>& fermat_config() {
    static const LineConfiguration<Eisenstein> cfg = twenty_seven_lines(fermat_blowup());
    return cfg;
}

}  // namespace

TEST_CASE("Base points of the Fermat pencil and its transpose") {
    auto m = fermat_pencil_eq6();
    auto pts = base_points(m);
    for (const char* s : {"100", "010", "001", "111", "1wW", "1Ww"})
        CHECK(contains_projectively(pts, eisenstein_point(s)));
    auto pts_t = base_points(m.transpose());
    for (const char* s : {"100", "010", "001", "W11", "11W", "1W1"})
        CHECK(contains_projectively(pts_t, eisenstein_point(s)));
    auto hinted = base_points(m, fermat_config());
    for (const auto& p : hinted) CHECK(contains_projectively(pts, p));
}

TEST_CASE("Lines of the Fermat pencils") {
    auto m = fermat_pencil_eq6();
    auto lines = lines_of_rep(m);
    for (const char* s : {"w100/00w1", "1100/001w", "1w00/0011", "1001/0110", "100w/01w0", "w001/0w10"})
        CHECK(contains_line(lines, eisenstein_line(s)));
    auto lt = lines_of_rep(m.transpose());
    for (const char* s : {"1100/0011", "1w00/00w1", "w100/001w", "w001/01w0", "1001/0w10", "100w/0110"})
        CHECK(contains_line(lt, eisenstein_line(s)));
    auto mp = fermat_pencil_prime();
    auto e = [&](std::size_t k) { return line_of_base_point(mp, unit_point(k)); };
    CHECK(e(0) == eisenstein_line("w100/00w1"));
    CHECK(e(1) == eisenstein_line("1100/001w"));
    CHECK(e(2) == eisenstein_line("1w00/0011"));
    auto mpt = mp.transpose();
    CHECK(line_of_base_point(mpt, unit_point(0)) == eisenstein_line("1w00/001w"));
    CHECK(line_of_base_point(mpt, unit_point(1)) == eisenstein_line("w100/0011"));
    CHECK(line_of_base_point(mpt, unit_point(2)) == eisenstein_line("1100/00w1"));
}

TEST_CASE("Equivalence decisions of the Fermat example") {
    auto m = fermat_pencil_eq6();
    auto m1 = fermat_pencil_prime();
    auto m2 = fermat_pencil_double_prime();
    const auto& cfg = fermat_config();
    CHECK(equivalent(m, m2));
    CHECK_FALSE(equivalent(m, m1));
    CHECK(equivalent(m, m));
    CHECK(equivalent(m, m2, cfg));
    CHECK_FALSE(equivalent(m, m1, cfg));
    auto w = equivalence_witness(m, m2, cfg);
    REQUIRE(w);
    CHECK(m.transformed(w->X, w->Y) == m2);
    CHECK_FALSE(equivalence_witness(m, m1, cfg));
}

TEST_CASE("Reduction to the zero-diagonal form") {
    const auto& cfg = fermat_config();
    for (const auto& m : {fermat_pencil_eq6(), fermat_pencil_double_prime(), fermat_pencil_prime(),
                          fermat_pencil_eq6().transpose()}) {
        auto r = reduce_to_rform(m, cfg);
        CHECK(m.transformed(r.witness.X, r.witness.Y) == r.rform.pencil);
        CHECK(r.rform.pencil.is_zero_diagonal());
        CHECK_FALSE(determinant(r.witness.X).is_zero());
        CHECK_FALSE(determinant(r.witness.Y).is_zero());
        CHECK(det_pencil(r.rform.pencil) == cfg.surface);
    }
}

TEST_CASE("Zero-diagonal forms from double-sixes") {
    const auto& cfg = fermat_config();
    auto dss = double_sixes(cfg);
    auto r = rform_from_double_six(cfg, dss.front(), cfg.surface);
    CHECK(det_pencil(r.pencil) == cfg.surface);
    CHECK(r.pencil.is_zero_diagonal());
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(line_of_base_point(r.pencil, unit_point(k)) == cfg.lines[dss.front().upper[k]]);
        CHECK(line_of_base_point(r.pencil.transpose(), unit_point(k)) == cfg.lines[dss.front().lower[k]]);
    }
    CHECK(equivalent(r.pencil, fermat_pencil_eq6(), cfg) ==
          (std::set<std::size_t>(dss.front().upper.begin(), dss.front().upper.end()) ==
           std::set<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST_CASE("All 72 representations are pairwise nonequivalent") {
    const auto& cfg = fermat_config();
    auto reps = all_representations(cfg, cfg.surface);
    REQUIRE(reps.size() == 72);
    std::set<std::array<std::size_t, 6>> seen;
    for (const auto& r : reps) {
        auto idx = rep_line_indices(r.pencil, cfg);
        auto up = r.ds.upper;
        std::sort(up.begin(), up.end());
        CHECK(idx == up);
        seen.insert(idx);
        auto idx_t = rep_line_indices(r.pencil.transpose(), cfg);
        auto low = r.ds.lower;
        std::sort(low.begin(), low.end());
        CHECK(idx_t == low);
        CHECK_FALSE(r.pencil == r.pencil.transpose());
        CHECK(det_pencil(r.pencil) == cfg.surface);
    }
    CHECK(seen.size() == 72);
}

TEST_CASE("Adjugate") {
    const auto& cfg = fermat_config();
    auto m = fermat_pencil_eq6();
    auto adj = adjugate(m);
    for (const auto& z : surface_sample_points(cfg.surface, 12, 7)) CHECK(adjugate_rank_at(adj, z) == 1);
    auto dss = double_sixes(cfg);
    const auto& ds = dss.back();
    auto r = rform_from_double_six(cfg, ds, cfg.surface);
    auto ra = adjugate(r.pencil);
    auto p = [&](std::size_t i, std::size_t j) { return Form<Eisenstein>::linear(r.pencil.entry(i, j)); };
    CHECK(ra[0][0] == -(p(1, 2) * p(2, 1)));
    CHECK(ra[1][0] == p(1, 2) * p(2, 0));
    CHECK(ra[2][0] == p(1, 0) * p(2, 1));
    // first column vanishes on b2, c23, b3
    std::size_t c23 = third_line(cfg.incidence, ds.upper[1], ds.lower[2]);
    for (std::size_t l : {ds.lower[1], c23, ds.lower[2]}) {
        auto [a, b] = cfg.lines[l].points();
        for (long t : {0L, 1L, 5L}) {
            PointP3<Eisenstein> x(4);
            for (std::size_t k = 0; k < 4; ++k) x[k] = a[k] + Eisenstein(t) * b[k];
            for (std::size_t i = 0; i < 3; ++i) CHECK(ra[i][0].evaluate(x).is_zero());
        }
    }
    LinearPencil<Rational> constant;
    LinearPencil<Rational> z0id = LinearPencil<Rational>(
        {Matrix<Rational>::identity(3), Matrix<Rational>(3, 3), Matrix<Rational>(3, 3), Matrix<Rational>(3, 3)});
    auto ia = adjugate(z0id);
    auto z0 = Form<Rational>::variable(4, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(ia[i][k] == (i == k ? z0 * z0 : Form<Rational>(4, 2)));
    (void)constant;
}

TEST_CASE("Degenerate twisted cubics") {
    const auto& cfg = fermat_config();
    auto d = degenerate_twisted_cubics(fermat_pencil_eq6(), cfg);
    CHECK(d.size() == 15);
    auto sys = twisted_cubic_system(fermat_pencil_eq6());
    CHECK(divisor_degree(sys.divisor_class) == 3);
    CHECK(divisor_genus(sys.divisor_class) == 0);
}

TEST_CASE("Divisor classes") {
    CHECK(divisor_degree({5, {2, 2, 2, 2, 2, 2}}) == 3);
    CHECK(divisor_genus({5, {2, 2, 2, 2, 2, 2}}) == 0);
    CHECK(divisor_degree({0, {-1, 0, 0, 0, 0, 0}}) == 1);
    CHECK(divisor_degree({1, {0, 0, 0, 0, 0, 0}}) == 3);
    CHECK(divisor_genus({1, {0, 0, 0, 0, 0, 0}}) == 0);
    auto all = enumerate_72_classes();
    CHECK(all.size() == 72);
    std::map<int, int> by_alpha;
    for (const auto& c : all) ++by_alpha[c.alpha];
    CHECK(by_alpha[1] == 1);
    CHECK(by_alpha[2] == 20);
    CHECK(by_alpha[3] == 30);
    CHECK(by_alpha[4] == 20);
    CHECK(by_alpha[5] == 1);
    int n3 = 0;
    for (const auto& c : all)
        if (beta_pattern(c) == std::array<int, 6>{2, 1, 1, 1, 1, 0}) ++n3;
    CHECK(n3 == 30);
    CHECK(enumerate_72_classes() == all);
}
