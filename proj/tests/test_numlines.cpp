#include <doctest.h>

#include "cubicdet/builtins.hpp"
#include "cubicdet/numlines.hpp"
#include "cubicdet/realgeom.hpp"
#include "test_util.hpp"

using namespace cubicdet;

TEST_CASE("Numeric lines of the Fermat cubic agree with the exact ones") {
    auto nl = find_lines_numeric(fermat_form<Rational>());
    REQUIRE(nl.lines.size() == 27);
    std::vector<LineH<ComplexFloat>> exact;
    for (const auto& l : fermat_paper_lines()) exact.push_back(to_complex_line(l));
    CHECK(match_line_sets(nl.lines, exact) < 1e-8);
    CHECK(std::count(nl.real.begin(), nl.real.end(), true) == 3);
    auto again = find_lines_numeric(fermat_form<Rational>());
    for (std::size_t i = 0; i < 27; ++i) CHECK(line_distance(again.lines[i], nl.lines[i]) == 0.0);
}

TEST_CASE("Numeric lines of the F5 surface") {
    auto f = f5_form<Rational>();
    auto nl = find_lines_numeric(f);
    REQUIRE(nl.lines.size() == 27);
    std::vector<LineH<ComplexFloat>> real;
    for (std::size_t i = 0; i < 27; ++i)
        if (nl.real[i]) real.push_back(nl.lines[i]);
    REQUIRE(real.size() == 3);
    PlaneH<ComplexFloat> alpha{1, 0, 1, 0};
    for (const auto& l : real) CHECK(l.lies_on(alpha));
}

TEST_CASE("Real tritangent planes through r on the F5 surface") {
    auto f = f5_form<Rational>();
    LineH<ComplexFloat> r(PlaneH<ComplexFloat>{1, 0, 1, 0}, PlaneH<ComplexFloat>{0, 0, -2, 3});
    auto planes = real_tritangents_through(f, r);
    REQUIRE(planes.size() == 4);
    const std::vector<std::array<double, 4>> printed = {
        {1, 0, 0.98987, 0.01519}, {1, 0, 0.01345, 1.47982}, {1, 0, -3.00333, 6.00499}, {0, 0, -2, 3}};
    for (const auto& p : printed) {
        bool found = false;
        for (const auto& q : planes) {
            // compare after scaling to the printed normalization
            std::size_t piv = p[0] != 0.0 ? 0 : 2;
            double s = p[piv] / q[piv].value().real();
            double err = 0.0;
            for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(q[i].value().real() * s - p[i]));
            if (err < 1e-4) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("F5 real structure and definiteness census") {
    auto f = f5_form<Rational>();
    auto cfg = numeric_configuration(f);
    auto s = segre_type(cfg);
    CHECK(s.type == SegreType::F5);
    auto sc = self_conjugate_double_sixes(cfg);
    CHECK(sc.size() == 12);
    for (const auto& c : sc) CHECK(c.kind == DoubleSixKind::IV);
    auto classes = selfadjoint_classes(cfg, cfg.surface);
    REQUIRE(classes.size() == 24);
    int definite = 0, indefinite = 0, unknown = 0;
    for (const auto& u : classes) {
        CHECK(u.pencil.is_self_adjoint());
        auto r = is_definite(u.pencil);
        if (r.verdict == Verdict::Definite) ++definite;
        if (r.verdict == Verdict::Indefinite) ++indefinite;
        if (r.verdict == Verdict::Unknown) ++unknown;
        MESSAGE(to_string(r.verdict) << " " << to_string(r.certificate) << " " << r.diagnostics);
    }
    CHECK(definite == 16);
    CHECK(indefinite == 8);
    CHECK(unknown == 0);
}

TEST_CASE("Printed definite representation of the F5 surface") {
    auto u = f5_printed_definite();
    CHECK(u.is_self_adjoint());
    auto c = complex_coefficients(u, true);
    const std::array<double, 4> z{0.02, 0.0, -1.2, -0.3};
    CMat a = CMat::Zero(3, 3);
    for (std::size_t j = 0; j < 4; ++j) a += z[j] * c[j];
    Eigen::VectorXd ev = hermitian_eigenvalues(a);
    std::sort(ev.data(), ev.data() + 3);
    CHECK(std::abs(ev(0) - 0.00293) < 1e-4);
    CHECK(std::abs(ev(1) - 1.17540) < 1e-4);
    CHECK(std::abs(ev(2) - 1.50013) < 1e-4);
    auto r = is_definite(u);
    CHECK(r.verdict == Verdict::Definite);
    CHECK(r.margin > 0.0);

    // det is proportional to F up to the printed precision
    auto d = det_pencil(u);
    auto f = to_complex_form(f5_form<Rational>());
    cplx num = 0.0;
    double den = 0.0, res = 0.0, nd = 0.0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        num += std::conj(f.coeffs()[k].value()) * d.coeffs()[k].value();
        den += std::norm(f.coeffs()[k].value());
    }
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        res += std::norm(num / den * f.coeffs()[k].value() - d.coeffs()[k].value());
        nd += std::norm(d.coeffs()[k].value());
    }
    MESSAGE("relative det residual " << std::sqrt(res / nd));
    CHECK(std::sqrt(res / nd) < 1e-3);
}

TEST_CASE("Printed representation U' of the F5 surface is indefinite") {
    auto u = f5_printed_uprime();
    auto so = self_orthogonal_vectors(u);
    MESSAGE(so.diagnostics);
    CHECK(so.vectors.empty());
    CHECK(so.conclusive);
    auto r = is_definite(u);
    MESSAGE(to_string(r.verdict) << " " << to_string(r.certificate) << " " << r.diagnostics);
    CHECK(r.verdict == Verdict::Indefinite);
    CHECK(r.certificate == Certificate::NegativeE2Gram);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> ge(r.e2_gram);
    MESSAGE("e2 gram eigenvalues " << ge.eigenvalues().transpose());
}

TEST_CASE("Clebsch diagonal cubic has only real lines") {
    auto cfg = numeric_configuration(clebsch_form<Rational>());
    auto s = segre_type(cfg);
    CHECK(s.type == SegreType::F1);
    CHECK(s.real == 27);
    CHECK(self_conjugate_double_sixes(cfg).empty());
    CHECK(selfadjoint_classes(cfg, cfg.surface).empty());
}
