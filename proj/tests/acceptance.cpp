// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cubicdet/builtins.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/numlines.hpp"
#include "cubicdet/realgeom.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace cubicdet;

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << "failed: " << what;
            ok = false;
        }
    }
};

const LineConfiguration<Eisenstein>& fermat_config() {
    static const LineConfiguration<Eisenstein> cfg = twenty_seven_lines(fermat_blowup());
    return cfg;
}

bool vanishes_on_line(const Form<Eisenstein>& f, const LineH<Eisenstein>& l) {
    auto [a, b] = l.points();
    for (long t : {0L, 1L, 2L, 3L, 7L}) {
        PointP3<Eisenstein> x(4);
        for (std::size_t k = 0; k < 4; ++k) x[k] = a[k] + Eisenstein(t) * b[k];
        if (!f.evaluate(x).is_zero()) return false;
    }
    return f.evaluate(b).is_zero();
}

void fermat_lines(Check& c) {
    const auto& cfg = fermat_config();
    const auto expected = fermat_paper_lines();
    std::set<std::size_t> hit;
    for (const auto& l : expected) hit.insert(find_line(cfg, l));
    c.expect(cfg.lines.size() == 27, "27 lines");
    c.expect(hit.size() == 27 && !hit.contains(static_cast<std::size_t>(-1)), "same set as the printed list");
    std::size_t nonzero = 0;
    for (const auto& l : cfg.lines) nonzero += vanishes_on_line(cfg.surface, l) ? 0 : 1;
    c.expect(nonzero == 0, "zero residuals");
    c.detail << "27 lines, " << hit.size() << " matched, " << nonzero << " nonzero residuals";
}

void fermat_pencil_identity(Check& c) {
    const auto s = fermat_blowup();
    // M(z) x = L(x) z is bilinear, so the 12 basis pairs prove it identically.
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            PointP2<Eisenstein> x(3, Eisenstein(0));
            PointP3<Eisenstein> z(4, Eisenstein(0));
            x[i] = Eisenstein(1);
            z[j] = Eisenstein(1);
            if (s.M.at(z) * x != s.L.at(x) * z) ++bad;
        }
    c.expect(bad == 0, "bilinear identity");
    c.expect(s.M == fermat_pencil_eq6(), "pencil equals the printed one");
    const auto d = det_pencil(s.M);
    const auto f = fermat_form<Eisenstein>();
    Eisenstein ratio = d.coeffs()[0] / f.coeffs()[0];
    c.expect(!ratio.is_zero() && d == ratio * f, "det M = c F with exact ratio");
    c.detail << "identity holds on all 12 basis pairs, det M = (" << ratio.str() << ") F";
}

void fermat_base_points(Check& c) {
    const auto m = fermat_pencil_eq6();
    const auto pts = base_points(m);
    const auto pts_t = base_points(m.transpose());
    int found = 0, found_t = 0;
    for (const char* s : {"100", "010", "001", "111", "1wW", "1Ww"})
        found += contains_projectively(pts, eisenstein_point(s)) ? 1 : 0;
    for (const char* s : {"100", "010", "001", "W11", "11W", "1W1"})
        found_t += contains_projectively(pts_t, eisenstein_point(s)) ? 1 : 0;
    c.expect(found == 6, "base points of M");
    c.expect(found_t == 6, "base points of the transpose");
    c.detail << found << "/6 and " << found_t << "/6 printed points matched";
}

void fermat_equivalence(Check& c) {
    const auto& cfg = fermat_config();
    const auto m = fermat_pencil_eq6();
    const auto m1 = fermat_pencil_prime();
    const auto m2 = fermat_pencil_double_prime();
    c.expect(equivalent(m, m2, cfg), "M ~ M''");
    c.expect(!equivalent(m, m1, cfg), "M !~ M'");
    auto w = equivalence_witness(m, m2, cfg);
    c.expect(w && m.transformed(w->X, w->Y) == m2, "X M Y = M''");
    std::size_t exact = 0;
    for (const auto& p : {m, m1, m2}) {
        auto r = reduce_to_rform(p, cfg);
        if (p.transformed(r.witness.X, r.witness.Y) == r.rform.pencil) ++exact;
    }
    c.expect(exact == 3, "reduction witnesses");
    c.detail << "M ~ M'' and M !~ M'; " << exact << "/3 reductions X M Y = R with zero residual";
}

void counting_suite(Check& c) {
    const auto& cfg = fermat_config();
    const auto tri = tritangent_planes(cfg).size();
    const auto dss = double_sixes(cfg);
    const auto steiner = steiner_sets(cfg).size();
    c.expect(tri == 45, "45 tritangent planes");
    c.expect(dss.size() == 36, "36 double-sixes");
    std::array<int, 3> split{};
    for (const auto& ds : dss) {
        int n = 0;
        for (std::size_t k = 0; k < 6; ++k) n += (ds.upper[k] >= 12 ? 1 : 0) + (ds.lower[k] >= 12 ? 1 : 0);
        ++split[n == 0 ? 0 : n == 8 ? 1 : 2];
    }
    c.expect(split == std::array<int, 3>{1, 15, 20}, "split 1+15+20");
    c.expect(steiner == 120, "120 Steiner sets");
    const auto reps = all_representations(cfg, cfg.surface);
    std::set<std::array<std::size_t, 6>> distinct;
    for (const auto& r : reps) distinct.insert(rep_line_indices(r.pencil, cfg));
    c.expect(reps.size() == 72 && distinct.size() == 72, "72 nonequivalent representatives");
    const auto classes = enumerate_72_classes();
    std::map<int, int> by_alpha;
    for (const auto& d : classes) ++by_alpha[d.alpha];
    c.expect(classes.size() == 72 && by_alpha == std::map<int, int>{{1, 1}, {2, 20}, {3, 30}, {4, 20}, {5, 1}},
             "divisor classes 1/20/30/20/1");
    c.detail << tri << " planes, " << dss.size() << " double-sixes (" << split[0] << "+" << split[1] << "+"
             << split[2] << "), " << steiner << " Steiner sets, " << distinct.size() << " representatives, "
             << classes.size() << " divisor classes";
}

void adjugate_properties(Check& c) {
    const auto& cfg = fermat_config();
    const auto m = fermat_pencil_eq6();
    const auto adj = adjugate(m);
    const auto d = det_pencil(m);
    bool identity = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Form<Eisenstein> s(4, 3);
            for (std::size_t k = 0; k < 3; ++k) s += m.entry_form(i, k) * adj[k][j];
            if (!(s == (i == j ? d : Form<Eisenstein>(4, 3)))) identity = false;
        }
    c.expect(identity, "M adj(M) = det(M) I");
    const auto pts = surface_sample_points(cfg.surface, 12, 7);
    std::size_t rank_one = 0;
    for (const auto& z : pts) rank_one += adjugate_rank_at(adj, z) == 1 ? 1 : 0;
    c.expect(pts.size() >= 10 && rank_one == pts.size(), "adjugate rank 1 on the surface");
    const auto ds = double_sixes(cfg).back();
    const auto r = rform_from_double_six(cfg, ds, cfg.surface);
    const auto ra = adjugate(r.pencil);
    const std::size_t c23 = third_line(cfg.incidence, ds.upper[1], ds.lower[2]);
    bool contained = true;
    for (std::size_t l : {ds.lower[1], c23, ds.lower[2]})
        for (std::size_t i = 0; i < 3; ++i) contained = contained && vanishes_on_line(ra[i][0], cfg.lines[l]);
    c.expect(contained, "first adjugate column vanishes on b2, c23, b3");
    c.detail << "adjugate identity exact, rank 1 at " << rank_one << "/" << pts.size()
             << " surface points, first column vanishes on b2, c23, b3";
}

void real_classification(Check& c) {
    const auto& cfg = fermat_config();
    const auto seg = segre_type(cfg);
    const auto sc = self_conjugate_double_sixes(cfg);
    std::size_t kind3 = 0;
    for (const auto& d : sc) kind3 += d.kind == DoubleSixKind::III ? 1 : 0;
    c.expect(seg.type == SegreType::F4, "type F4");
    c.expect(sc.size() == 3 && kind3 == 3, "three self-conjugate double-sixes of kind III");
    const auto classes = selfadjoint_classes(cfg, cfg.surface);
    bool hermitian = classes.size() == 6;
    for (const auto& u : classes)
        hermitian = hermitian && u.pencil.is_self_adjoint() && projectively_equal(det_pencil(u.pencil), cfg.surface);
    c.expect(hermitian, "six hermitian classes with det proportional to F");
    const auto u1 = example_u1(), u2 = example_u2();
    const auto h = hermitean_equivalent(u1, u2, cfg);
    c.expect(h.relation == HermiteanRelation::Plus, "U1 and U2 related with sign +");
    c.expect(u1.transformed(h.X, h.X.adjoint()).scaled(h.k) == u2, "X verifies the relation");
    c.detail << to_string(seg.type) << ", " << sc.size() << " self-conjugate double-sixes (" << kind3
             << " of kind III), " << classes.size() << " self-adjoint classes, relation " << to_string(h.relation);
}

void f5_numerics(Check& c) {
    const auto f = f5_form<Rational>();
    const auto nl = find_lines_numeric(f);
    std::vector<LineH<ComplexFloat>> real;
    for (std::size_t i = 0; i < nl.lines.size(); ++i)
        if (nl.real[i]) real.push_back(nl.lines[i]);
    const PlaneH<ComplexFloat> alpha{1, 0, 1, 0};
    bool coplanar = real.size() == 3;
    for (const auto& l : real) coplanar = coplanar && l.lies_on(alpha);
    c.expect(nl.lines.size() == 27, "27 lines");
    c.expect(coplanar, "3 real coplanar lines");

    const LineH<ComplexFloat> r(PlaneH<ComplexFloat>{1, 0, 1, 0}, PlaneH<ComplexFloat>{0, 0, -2, 3});
    const auto planes = real_tritangents_through(f, r);
    const std::vector<std::array<double, 4>> printed = {
        {1, 0, 0.98987, 0.01519}, {1, 0, 0.01345, 1.47982}, {1, 0, -3.00333, 6.00499}, {0, 0, -2, 3}};
    double worst_plane = 0.0;
    for (const auto& p : printed) {
        double best = 1e9;
        const std::size_t piv = p[0] != 0.0 ? 0 : 2;
        for (const auto& q : planes) {
            if (std::abs(q[piv].value().real()) < 1e-12) continue;
            const double s = p[piv] / q[piv].value().real();
            double err = 0.0;
            for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(q[i].value().real() * s - p[i]));
            best = std::min(best, err);
        }
        worst_plane = std::max(worst_plane, best);
    }
    c.expect(planes.size() == 4 && worst_plane < 1e-4, "4 real tritangent planes through r within 1e-4");

    const auto cm = complex_coefficients(f5_printed_definite(), true);
    const std::array<double, 4> z{0.02, 0.0, -1.2, -0.3};
    CMat a = CMat::Zero(3, 3);
    for (std::size_t j = 0; j < 4; ++j) a += z[j] * cm[j];
    Eigen::VectorXd ev = hermitian_eigenvalues(a);
    std::sort(ev.data(), ev.data() + 3);
    const double ev_err =
        std::max({std::abs(ev(0) - 0.00293), std::abs(ev(1) - 1.17540), std::abs(ev(2) - 1.50013)});
    c.expect(ev_err < 1e-4, "eigenvalues within 1e-4");
    c.detail << nl.lines.size() << " lines, " << real.size() << " real, " << planes.size()
             << " real tritangents through r (max deviation " << worst_plane << "), eigenvalues " << ev(2) << ", "
             << ev(1) << ", " << ev(0) << " (max deviation " << ev_err << ")";
}

void f5_census(Check& c) {
    const auto cfg = numeric_configuration(f5_form<Rational>());
    const auto classes = selfadjoint_classes(cfg, cfg.surface);
    int definite = 0, indefinite = 0, unknown = 0;
    for (const auto& u : classes) {
        const auto r = is_definite(u.pencil);
        definite += r.verdict == Verdict::Definite ? 1 : 0;
        indefinite += r.verdict == Verdict::Indefinite ? 1 : 0;
        unknown += r.verdict == Verdict::Unknown ? 1 : 0;
    }
    c.expect(classes.size() == 24, "24 classes");
    c.expect(definite == 16 && indefinite == 8 && unknown == 0, "16 definite, 8 indefinite, none unknown");
    c.detail << classes.size() << " classes: " << definite << " definite, " << indefinite << " indefinite, " << unknown
             << " unknown";
}

void certificates(Check& c) {
    const auto so = self_orthogonal_vectors(example_u1());
    bool e1 = false;
    for (const auto& h : so.vectors) {
        const double scale = std::abs(h[0]);
        if (scale > 0.0 && std::abs(h[1]) < 1e-9 * scale && std::abs(h[2]) < 1e-9 * scale) e1 = true;
    }
    c.expect(e1, "self-orthogonal vector (w, 0, 0) for the Fermat U");
    const auto r = is_definite(example_u1());
    c.expect(r.verdict == Verdict::Indefinite, "Fermat U indefinite");
    const auto up = f5_printed_uprime();
    const auto so2 = self_orthogonal_vectors(up);
    c.expect(so2.vectors.empty() && so2.conclusive, "empty self-orthogonal list for U'");
    const auto r2 = is_definite(up);
    c.expect(r2.verdict == Verdict::Indefinite && r2.certificate == Certificate::NegativeE2Gram,
             "U' indefinite by the e2 Gram certificate");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> ge(r2.e2_gram);
    c.expect(ge.eigenvalues().maxCoeff() <= 1e-9, "e2 Gram negative semidefinite");
    c.detail << "Fermat U: " << to_string(r.certificate) << "; U': " << so2.vectors.size()
             << " self-orthogonal vectors, " << to_string(r2.certificate) << " with largest Gram eigenvalue "
             << ge.eigenvalues().maxCoeff();
}

void property_suites(Check& c) {
    for (const auto& suite : props::all_suites()) {
        const auto r = suite.run(1000, 20240601);
        c.expect(r.ok() && r.cases == 1000, std::string(suite.name) + " (" + r.first_failure + ")");
        c.detail << suite.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
    }
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Fermat 27 lines", 10, fermat_lines},
        {2, "Fermat pencil identity and determinant", 5, fermat_pencil_identity},
        {3, "Base points of M and its transpose", 0, fermat_base_points},
        {4, "Equivalence decisions and witnesses", 0, fermat_equivalence},
        {5, "Counting suite on the Fermat cubic", 120, counting_suite},
        {6, "Adjugate properties", 0, adjugate_properties},
        {7, "Real classification of the Fermat cubic", 0, real_classification},
        {8, "F5 numerics", 300, f5_numerics},
        {9, "F5 definiteness census", 0, f5_census},
        {10, "Definiteness certificates", 0, certificates},
        {11, "Property suites, 1000 cases each", 0, property_suites},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_seconds > 0 && secs > cr.limit_seconds) c.expect(false, "runtime limit");
        std::string limit = cr.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s" : "";
        std::printf("[%s] %2d %s (%.2f s%s): %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, secs, limit.c_str(),
                    c.detail.str().c_str());
        std::fflush(stdout);
        failed += c.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
