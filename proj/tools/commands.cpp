#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cubicdet/builtins.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/numlines.hpp"
#include "cubicdet/realgeom.hpp"
#include "cubicdet/surface.hpp"
#include "parallel.hpp"

namespace cubicdet::cli {

using report::labels;

SurfaceSpec spec_from_builtin(const std::string& name) {
    if (!is_builtin(name)) throw InputError("unknown builtin surface '" + name + "' (fermat, f5paper, clebsch)");
    SurfaceSpec s;
    s.builtin = name;
    return s;
}

SurfaceSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw InputError("surface spec must be a JSON object");
    const int given = static_cast<int>(j.contains("builtin")) + static_cast<int>(j.contains("coefficients")) +
                      static_cast<int>(j.contains("points"));
    if (given != 1) throw InputError("surface spec needs exactly one of builtin, coefficients, points");
    if (j.contains("builtin")) {
        if (!j["builtin"].is_string()) throw InputError("builtin must be a string");
        return spec_from_builtin(j["builtin"].get<std::string>());
    }
    SurfaceSpec s;
    if (j.contains("coefficients")) {
        if (!j["coefficients"].is_array() || j["coefficients"].size() != 20)
            throw InputError("coefficients must be an array of 20 scalars (z0..z3 cubic monomials, grlex)");
        s.coefficients = j["coefficients"];
    } else {
        const auto& p = j["points"];
        if (!p.is_array() || p.size() != 6) throw InputError("points must be an array of 6 plane points");
        for (const auto& x : p)
            if (!x.is_array() || x.size() != 3) throw InputError("each point has 3 homogeneous coordinates");
        s.points = p;
    }
    return s;
}

Mode parse_mode(const std::string& s) {
    if (s == "auto") return Mode::Auto;
    if (s == "exact") return Mode::Exact;
    if (s == "float") return Mode::Float;
    throw InputError("mode must be exact, float or auto");
}

json error_record(const std::string& command, const std::string& kind, const std::string& message) {
    json out = report::make_report(command);
    out["error"] = {{"kind", kind}, {"message", message}};
    return out;
}

namespace {

template <FieldType K>
struct Surface {
    LineConfiguration<K> cfg;
    json description;
};

NumericLineOptions line_options(const Options& opts) {
    NumericLineOptions o;
    o.seed = opts.seed;
    o.tol = opts.tol;
    return o;
}

bool points_are_exact(const json& points) {
    for (const auto& p : points)
        for (const auto& x : p)
            if (!x.is_string() && !x.is_number_integer()) return false;
    try {
        for (const auto& p : points)
            for (const auto& x : p) report::scalar_from_json<Eisenstein>(x);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool use_exact(const SurfaceSpec& spec, Mode mode) {
    bool possible = spec.builtin == "fermat" || (spec.points && points_are_exact(*spec.points));
    if (mode == Mode::Exact && !possible)
        throw InputError(
            "exact mode needs the fermat builtin or base points with exact (Eisenstein) coordinates; "
            "use --mode float");
    if (mode == Mode::Float) return false;
    return possible;
}

template <FieldType K>
std::array<PointP2<K>, 6> points_from_json(const json& j) {
    std::array<PointP2<K>, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = report::vec_from_json<K>(j[i], 3);
    return out;
}

Surface<Eisenstein> load_exact(const SurfaceSpec& spec) {
    Surface<Eisenstein> s;
    BlowupSurface<Eisenstein> b = spec.builtin == "fermat" ? fermat_blowup()
                                                           : make_blowup(points_from_json<Eisenstein>(*spec.points));
    s.cfg = twenty_seven_lines(b);
    s.description = {{"source", spec.builtin.empty() ? "points" : "builtin:" + spec.builtin},
                     {"mode", "exact"},
                     {"field", "eisenstein"},
                     {"points", json::array()},
                     {"coefficients", report::form_to_json(s.cfg.surface)}};
    for (const auto& p : b.points) s.description["points"].push_back(report::vec_to_json(p));
    return s;
}

Surface<ComplexFloat> load_float(const SurfaceSpec& spec, const Options& opts) {
    Surface<ComplexFloat> s;
    std::string source;
    if (!spec.builtin.empty()) {
        source = "builtin:" + spec.builtin;
        Form<Rational> f = spec.builtin == "fermat"  ? fermat_form<Rational>()
                           : spec.builtin == "f5paper" ? f5_form<Rational>()
                                                       : clebsch_form<Rational>();
        s.cfg = numeric_configuration(f, line_options(opts));
    } else if (spec.coefficients) {
        source = "coefficients";
        auto f = report::cubic_from_json<ComplexFloat>(*spec.coefficients);
        if (!smoothness_check(f)) throw InputError("the cubic is not smooth");
        s.cfg = numeric_configuration(f, line_options(opts));
    } else {
        source = "points";
        s.cfg = twenty_seven_lines(make_blowup(points_from_json<ComplexFloat>(*spec.points)));
    }
    s.description = {{"source", source},
                     {"mode", "float"},
                     {"field", "complex_float"},
                     {"coefficients", report::form_to_json(s.cfg.surface)}};
    if (spec.builtin == "clebsch") s.description["note"] = "artifact addition, not from the source example set";
    return s;
}

template <FieldType K>
bool is_real_surface(const LineConfiguration<K>& cfg) {
    for (const auto& c : cfg.surface.coeffs())
        if (!c.is_real()) return false;
    return true;
}

template <FieldType K>
void require_real(const LineConfiguration<K>& cfg) {
    if (!is_real_surface(cfg)) throw InputError("this command needs a cubic with real coefficients");
}

/// Largest |F| at five points of each line, relative to the coefficient and
/// point sizes; zero means exact vanishing for exact fields.
template <FieldType K>
double line_residual(const LineConfiguration<K>& cfg) {
    auto f = to_complex_form(cfg.surface);
    double fn = 0.0;
    for (const auto& c : f.coeffs()) fn = std::max(fn, c.magnitude());
    double worst = 0.0;
    for (const auto& l : cfg.lines) {
        auto pts = l.points();
        if constexpr (K::exact) {
            for (int t = 0; t < 5; ++t) {
                Vec<K> x(4, K(0));
                for (std::size_t k = 0; k < 4; ++k) x[k] = pts[0][k] + K(t) * pts[1][k];
                if (!cfg.surface.evaluate(x).is_zero()) worst = std::max(worst, 1.0);
            }
        } else {
            for (int t = 0; t < 5; ++t) {
                const cplx s = std::polar(1.0, 2.0 * M_PI * t / 5.0);
                Vec<ComplexFloat> x(4);
                double xn = 0.0;
                for (std::size_t k = 0; k < 4; ++k) {
                    x[k] = ComplexFloat(pts[0][k].value() + s * pts[1][k].value());
                    xn = std::max(xn, x[k].magnitude());
                }
                worst = std::max(worst, f.evaluate(x).magnitude() / (fn * xn * xn * xn));
            }
        }
    }
    return worst;
}

template <FieldType K>
json lines_section(const LineConfiguration<K>& cfg) {
    json lines = json::array();
    const bool real = is_real_surface(cfg);
    for (std::size_t i = 0; i < cfg.lines.size(); ++i) {
        json l = {{"label", line_label(i)}, {"forms", report::line_to_json(cfg.lines[i])}};
        if (real) l["kind"] = to_string(line_kind(cfg.lines[i]).kind);
        lines.push_back(l);
    }
    return lines;
}

template <FieldType K>
json configuration_section(const LineConfiguration<K>& cfg) {
    json out;
    bool degrees = true;
    for (std::size_t i = 0; i < kLineCount; ++i) {
        int d = 0;
        for (std::size_t j = 0; j < kLineCount; ++j) d += cfg.incidence[i][j] ? 1 : 0;
        if (d != 10) degrees = false;
    }
    out["every_line_meets_ten"] = degrees;
    json planes = json::array();
    for (const auto& t : tritangent_planes(cfg)) planes.push_back(labels(t.lines));
    out["tritangent_planes"] = planes;
    json sixes = json::array();
    std::array<int, 3> split{};
    for (const auto& ds : double_sixes(cfg)) {
        sixes.push_back({{"upper", labels(ds.upper)}, {"lower", labels(ds.lower)}});
        int c = 0;
        for (std::size_t k = 0; k < 6; ++k) c += (ds.upper[k] >= 12 ? 1 : 0) + (ds.lower[k] >= 12 ? 1 : 0);
        ++split[c == 0 ? 0 : c == 8 ? 1 : 2];
    }
    out["double_sixes"] = sixes;
    out["double_six_split"] = split;
    json steiner = json::array();
    for (const auto& s : steiner_sets(cfg)) {
        json grid = json::array();
        for (const auto& row : s.grid) grid.push_back(labels(row));
        steiner.push_back(grid);
    }
    out["steiner_sets"] = steiner;
    out["counts"] = {{"lines", cfg.lines.size()},
                     {"tritangent_planes", planes.size()},
                     {"double_sixes", sixes.size()},
                     {"steiner_sets", steiner.size()}};
    return out;
}

template <FieldType K>
json cmd_lines(const Surface<K>& s) {
    json out;
    out["lines"] = lines_section(s.cfg);
    out["configuration"] = configuration_section(s.cfg);
    out["residuals"] = {{"lines_on_surface", line_residual(s.cfg)}};
    return out;
}

template <FieldType K>
struct RepsData {
    std::vector<RFormRep<K>> reps;
    std::vector<std::array<std::size_t, 6>> lines;
    std::vector<std::array<std::size_t, 6>> transposed_lines;
};

template <FieldType K>
RepsData<K> compute_reps(const LineConfiguration<K>& cfg, std::size_t jobs) {
    RepsData<K> d;
    d.reps = all_representations(cfg, cfg.surface);
    d.lines.resize(d.reps.size());
    d.transposed_lines.resize(d.reps.size());
    parallel_for(d.reps.size(), jobs, [&](std::size_t i) {
        d.lines[i] = rep_line_indices(d.reps[i].pencil, cfg);
        d.transposed_lines[i] = rep_line_indices(d.reps[i].pencil.transpose(), cfg);
    });
    return d;
}

template <FieldType K>
json cmd_reps(const Surface<K>& s, const Options& opts) {
    auto d = compute_reps(s.cfg, opts.jobs);
    json reps = json::array();
    std::set<std::array<std::size_t, 6>> distinct(d.lines.begin(), d.lines.end());
    bool pairing = true;
    for (std::size_t i = 0; i < d.reps.size(); ++i) {
        const auto& r = d.reps[i];
        long partner = -1;
        for (std::size_t k = 0; k < d.reps.size(); ++k)
            if (d.lines[k] == d.transposed_lines[i]) partner = static_cast<long>(k);
        if (partner != static_cast<long>(i ^ 1U)) pairing = false;
        reps.push_back({{"index", i},
                        {"double_six", i / 2},
                        {"side", i % 2 == 0 ? "upper" : "lower"},
                        {"lines", labels(d.lines[i])},
                        {"columns", labels(std::array<std::size_t, 3>{r.ds.upper[0], r.ds.upper[1], r.ds.upper[2]})},
                        {"rows", labels(std::array<std::size_t, 3>{r.ds.lower[0], r.ds.lower[1], r.ds.lower[2]})},
                        {"s", report::scalar_to_json(r.s)},
                        {"lambda", report::scalar_to_json(r.lambda)},
                        {"pencil", report::pencil_to_json(r.pencil)},
                        {"transpose_partner", partner},
                        {"symmetric", r.pencil.is_symmetric()}});
    }
    json out;
    out["representative_choice"] =
        "for each double-six in catalog order, the pencil with columns from the upper row, then the one with "
        "columns from the lower row; the two are transposes up to equivalence";
    out["representations"] = reps;
    out["count"] = reps.size();
    out["pairwise_nonequivalent"] = distinct.size() == d.reps.size();
    out["transpose_pairing"] = pairing;
    return out;
}

template <FieldType K>
json cmd_classify_real(const Surface<K>& s) {
    require_real(s.cfg);
    json out;
    auto seg = segre_type(s.cfg);
    out["segre"] = {{"type", to_string(seg.type)}, {"real", seg.real}, {"first_kind", seg.first}, {"second_kind", seg.second}};
    json kinds = json::array();
    for (std::size_t i = 0; i < s.cfg.lines.size(); ++i) {
        auto k = line_kind(s.cfg.lines[i]);
        json e = {{"label", line_label(i)}, {"kind", to_string(k.kind)}};
        if (k.point) e["real_point"] = report::vec_to_json(*k.point);
        kinds.push_back(e);
    }
    out["line_kinds"] = kinds;
    json sc = json::array();
    auto list = self_conjugate_double_sixes(s.cfg);
    for (const auto& c : list)
        sc.push_back({{"upper", labels(c.ds.upper)},
                      {"lower", labels(c.ds.lower)},
                      {"kind", to_string(c.kind)},
                      {"permutation", c.permutation}});
    out["self_conjugate_double_sixes"] = sc;
    out["selfadjoint_class_count"] = 2 * list.size();
    return out;
}

template <FieldType K>
json selfadjoint_json(const SelfAdjointRep<K>& u, const LineConfiguration<K>& cfg) {
    return {{"double_six", {{"upper", labels(u.ds.upper)}, {"lower", labels(u.ds.lower)}}},
            {"lines", labels(rep_line_indices(u.pencil, cfg))},
            {"pencil", report::pencil_to_json(u.pencil)},
            {"gamma", report::scalar_to_json(u.gamma)},
            {"mu", report::scalar_to_json(u.mu)},
            {"hermitian", u.pencil.is_self_adjoint()}};
}

template <FieldType K>
json cmd_selfadjoint(const Surface<K>& s) {
    require_real(s.cfg);
    auto classes = selfadjoint_classes(s.cfg, s.cfg.surface);
    json list = json::array();
    std::set<std::array<std::size_t, 6>> distinct;
    for (const auto& u : classes) {
        list.push_back(selfadjoint_json(u, s.cfg));
        distinct.insert(rep_line_indices(u.pencil, s.cfg));
    }
    json out;
    out["classes"] = list;
    out["count"] = list.size();
    out["pairwise_nonequivalent"] = distinct.size() == classes.size();
    return out;
}

json cvec_json(const std::vector<cplx>& v) {
    json out = json::array();
    for (auto c : v) out.push_back({c.real(), c.imag()});
    return out;
}

json definiteness_json(const DefinitenessResult& r) {
    json out = {{"verdict", to_string(r.verdict)}, {"certificate", to_string(r.certificate)}};
    switch (r.certificate) {
        case Certificate::PositiveCombination:
            out["c"] = r.c;
            out["margin"] = r.margin;
            break;
        case Certificate::SelfOrthogonalVector:
            out["h"] = cvec_json(r.h);
            break;
        case Certificate::NegativeE2Gram: {
            json g = json::array();
            for (int i = 0; i < 4; ++i) g.push_back({r.e2_gram(i, 0), r.e2_gram(i, 1), r.e2_gram(i, 2), r.e2_gram(i, 3)});
            out["e2_gram"] = g;
            break;
        }
        case Certificate::DualPsdWitness: {
            json z = json::array();
            for (int i = 0; i < 3; ++i) {
                json row = json::array();
                for (int k = 0; k < 3; ++k) row.push_back({r.z(i, k).real(), r.z(i, k).imag()});
                z.push_back(row);
            }
            out["z"] = z;
            out["z_min_eigenvalue"] = r.z_min_eigenvalue;
            break;
        }
        case Certificate::None:
            break;
    }
    out["diagnostics"] = r.diagnostics;
    return out;
}

template <FieldType K>
json cmd_definiteness(const Surface<K>& s, const Options& opts) {
    require_real(s.cfg);
    auto classes = selfadjoint_classes(s.cfg, s.cfg.surface);
    std::vector<DefinitenessResult> results(classes.size());
    DefinitenessOptions dopts;
    dopts.seed = opts.seed;
    parallel_for(classes.size(), opts.jobs, [&](std::size_t i) { results[i] = is_definite(classes[i].pencil, dopts); });
    json list = json::array();
    int definite = 0, indefinite = 0, unknown = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        json e = selfadjoint_json(classes[i], s.cfg);
        e["definiteness"] = definiteness_json(results[i]);
        list.push_back(e);
        definite += results[i].verdict == Verdict::Definite ? 1 : 0;
        indefinite += results[i].verdict == Verdict::Indefinite ? 1 : 0;
        unknown += results[i].verdict == Verdict::Unknown ? 1 : 0;
    }
    json out;
    out["classes"] = list;
    out["summary"] = {{"classes", classes.size()}, {"definite", definite}, {"indefinite", indefinite}, {"unknown", unknown}};
    out["budgets"] = {{"directions", dopts.directions},
                      {"steps", dopts.steps},
                      {"dual_starts", dopts.dual_starts},
                      {"dual_steps", dopts.dual_steps}};
    return out;
}

template <FieldType K>
Matrix<K> random_invertible(Rng& rng) {
    for (;;) {
        Matrix<K> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) {
                if constexpr (K::exact)
                    m(i, k) = K(static_cast<long>(rng.next() % 7) - 3);
                else
                    m(i, k) = K(rng.complex_normal());
            }
        if (rank(m) == 3) return m;
    }
}

struct Checks {
    json list = json::array();
    bool ok = true;
    void add(const std::string& name, bool passed, json detail = json::object()) {
        list.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
        ok = ok && passed;
    }
    template <class F>
    void run(const std::string& name, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            add(name, false, {{"exception", e.what()}});
        }
    }
};

template <FieldType K>
json cmd_verify(const Surface<K>& s, const Options& opts) {
    const auto& cfg = s.cfg;
    Checks c;
    Rng rng(opts.seed);
    c.run("lines on surface", [&] {
        double r = line_residual(cfg);
        c.add("lines on surface", K::exact ? r == 0.0 : r < 1e-8, {{"residual", r}});
    });
    c.run("configuration counts", [&] {
        auto conf = configuration_section(cfg);
        bool ok = conf["every_line_meets_ten"].template get<bool>() && conf["counts"]["lines"] == 27 &&
                  conf["counts"]["tritangent_planes"] == 45 && conf["counts"]["double_sixes"] == 36 &&
                  conf["counts"]["steiner_sets"] == 120 && conf["double_six_split"] == json({1, 15, 20});
        c.add("configuration counts", ok, {{"counts", conf["counts"]}, {"double_six_split", conf["double_six_split"]}});
    });
    c.run("incidence symmetry", [&] {
        bool ok = true;
        for (std::size_t i = 0; i < kLineCount; ++i)
            for (std::size_t j = 0; j < kLineCount; ++j) ok = ok && cfg.incidence[i][j] == cfg.incidence[j][i];
        c.add("incidence symmetry", ok);
    });
    std::optional<RepsData<K>> reps;
    c.run("representations", [&] {
        reps = compute_reps(cfg, opts.jobs);
        std::set<std::array<std::size_t, 6>> distinct(reps->lines.begin(), reps->lines.end());
        bool pairing = true, symmetric = false;
        for (std::size_t i = 0; i < reps->reps.size(); ++i) {
            if (reps->transposed_lines[i] != reps->lines[i ^ 1U]) pairing = false;
            if (reps->reps[i].pencil.is_symmetric()) symmetric = true;
        }
        c.add("representations", reps->reps.size() == 72 && distinct.size() == 72 && pairing && !symmetric,
              {{"count", reps->reps.size()},
               {"distinct_line_sets", distinct.size()},
               {"transpose_pairing", pairing},
               {"any_symmetric", symmetric}});
    });
    if (reps) {
        c.run("reduction witnesses", [&] {
            bool ok = true;
            for (std::size_t t = 0; t < 4; ++t) {
                const auto& r = reps->reps[static_cast<std::size_t>(rng.next() % reps->reps.size())];
                auto m = r.pencil.transformed(random_invertible<K>(rng), random_invertible<K>(rng));
                auto red = reduce_to_rform(m, cfg, std::optional<RFormRep<K>>(r));
                ok = ok && witness_holds(m, r.pencil, red.witness);
            }
            c.add("reduction witnesses", ok);
        });
        c.run("equivalence relation laws", [&] {
            bool ok = true;
            for (std::size_t t = 0; t < 4; ++t) {
                std::array<LinearPencil<K>, 3> m;
                for (auto& x : m) {
                    const auto& r = reps->reps[static_cast<std::size_t>(rng.next() % reps->reps.size())];
                    x = r.pencil.transformed(random_invertible<K>(rng), random_invertible<K>(rng));
                }
                const bool ab = equivalent(m[0], m[1], cfg), ba = equivalent(m[1], m[0], cfg);
                const bool bc = equivalent(m[1], m[2], cfg), ac = equivalent(m[0], m[2], cfg);
                ok = ok && equivalent(m[0], m[0], cfg) && ab == ba && (!(ab && bc) || ac);
            }
            c.add("equivalence relation laws", ok);
        });
        c.run("adjugate", [&] {
            const auto& m = reps->reps.front().pencil;
            auto adj = adjugate(m);
            auto pts = surface_sample_points(cfg.surface, 10, opts.seed);
            bool rank_one = true;
            for (const auto& p : pts) rank_one = rank_one && adjugate_rank_at(adj, p) == 1;
            c.add("adjugate", rank_one, {{"sample_points", pts.size()}});
        });
    }
    if (is_real_surface(cfg)) {
        c.run("real structure", [&] {
            bool involution = true;
            for (const auto& l : cfg.lines) involution = involution && conj_line(conj_line(l)) == l;
            auto seg = segre_type(cfg);
            auto sc = self_conjugate_double_sixes(cfg);
            static const std::array<std::size_t, 5> expected{0, 1, 2, 3, 12};
            const bool table = sc.size() == expected[static_cast<std::size_t>(seg.type)];
            c.add("real structure", involution && table,
                  {{"segre", to_string(seg.type)}, {"self_conjugate_double_sixes", sc.size()}, {"conj_involution", involution}});
        });
        c.run("self-adjoint classes", [&] {
            auto classes = selfadjoint_classes(cfg, cfg.surface);
            bool ok = true;
            for (const auto& u : classes) ok = ok && u.pencil.is_self_adjoint();
            c.add("self-adjoint classes", ok, {{"count", classes.size()}});
        });
    }
    json out;
    out["checks"] = c.list;
    out["passed"] = c.ok;
    return out;
}

template <FieldType K>
json dispatch(const std::string& command, const Surface<K>& s, const Options& opts) {
    if (command == "lines") return cmd_lines(s);
    if (command == "reps") return cmd_reps(s, opts);
    if (command == "classify-real") return cmd_classify_real(s);
    if (command == "selfadjoint") return cmd_selfadjoint(s);
    if (command == "definiteness") return cmd_definiteness(s, opts);
    if (command == "verify") return cmd_verify(s, opts);
    throw InputError("unknown command " + command);
}

}  // namespace

json run_command(const std::string& command, const SurfaceSpec& spec, const Options& opts) {
    if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands))
        throw InputError("unknown command " + command);
    json out = report::make_report(command);
    out["seed"] = opts.seed;
    out["tol"] = opts.tol;
    json body;
    try {
        if (use_exact(spec, opts.mode)) {
            auto s = load_exact(spec);
            out["surface"] = s.description;
            body = dispatch(command, s, opts);
        } else {
            auto s = load_float(spec, opts);
            out["surface"] = s.description;
            body = dispatch(command, s, opts);
        }
    } catch (const report::SchemaError& e) {
        throw InputError(e.what());
    } catch (const DegeneratePoints& e) {
        throw InputError(e.what());
    } catch (const DegenerateSurface& e) {
        throw InputError(e.what());
    }
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    if (command == "verify" && !out["passed"].get<bool>()) throw VerificationFailure("verification failed", out);
    return out;
}

}  // namespace cubicdet::cli
