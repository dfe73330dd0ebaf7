#include "cubicdet/numlines.hpp"

#include <algorithm>

#include "cubicdet/instantiate.hpp"
#include "cubicdet/realgeom.hpp"
#include "cubicdet/surface.hpp"

namespace cubicdet {

namespace {

constexpr std::array<std::array<std::size_t, 4>, 6> kCharts = {
    {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};

struct ChartLine {
    std::vector<cplx> u, v;
};

ChartLine chart_line(std::size_t chart, const std::array<cplx, 4>& x) {
    const auto& c = kCharts[chart];
    ChartLine l{std::vector<cplx>(4, 0.0), std::vector<cplx>(4, 0.0)};
    l.u[c[0]] = 1.0;
    l.u[c[2]] = x[0];
    l.u[c[3]] = x[1];
    l.v[c[1]] = 1.0;
    l.v[c[2]] = x[2];
    l.v[c[3]] = x[3];
    return l;
}

/// Coefficients of F(s u + t v) at s^3, s^2 t, s t^2, t^3 via values at four roots of unity.
Eigen::Vector4cd restricted(const Form<ComplexFloat>& f, const ChartLine& l) {
    Eigen::Vector4cd vals;
    std::array<cplx, 4> roots = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    for (int k = 0; k < 4; ++k) {
        std::vector<cplx> z(4);
        for (std::size_t i = 0; i < 4; ++i) z[i] = l.u[i] + roots[static_cast<std::size_t>(k)] * l.v[i];
        vals(k) = evaluate_complex(f, z);
    }
    // p(t) = sum c_m t^m from values at t = i^k
    Eigen::Vector4cd c;
    for (int m = 0; m < 4; ++m) {
        cplx s = 0.0;
        for (int k = 0; k < 4; ++k) s += vals(k) * std::conj(std::pow(roots[static_cast<std::size_t>(k)], m));
        c(m) = s / 4.0;
    }
    return c;
}

Eigen::Vector4cd residual(const Form<ComplexFloat>& f, std::size_t chart, const std::array<cplx, 4>& x) {
    return restricted(f, chart_line(chart, x));
}

bool newton(const Form<ComplexFloat>& f, std::size_t chart, std::array<cplx, 4>& x, double& res_norm) {
    Eigen::Vector4cd r = residual(f, chart, x);
    for (int it = 0; it < 60; ++it) {
        if (r.norm() < 1e-14) break;
        Eigen::Matrix4cd j;
        const double h = 1e-7;
        for (int k = 0; k < 4; ++k) {
            auto xp = x, xm = x;
            xp[static_cast<std::size_t>(k)] += h;
            xm[static_cast<std::size_t>(k)] -= h;
            j.col(k) = (residual(f, chart, xp) - residual(f, chart, xm)) / (2.0 * h);
        }
        Eigen::Vector4cd d = j.partialPivLu().solve(-r);
        if (!d.allFinite()) return false;
        double lambda = 1.0;
        bool improved = false;
        for (int damp = 0; damp < 12; ++damp) {
            std::array<cplx, 4> y = x;
            for (int k = 0; k < 4; ++k) y[static_cast<std::size_t>(k)] += lambda * d(k);
            Eigen::Vector4cd ry = residual(f, chart, y);
            if (ry.norm() < r.norm()) {
                x = y;
                r = ry;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved) break;
        double size = 0.0;
        for (auto v : x) size = std::max(size, std::abs(v));
        if (size > 1e6) return false;
    }
    res_norm = r.norm();
    return res_norm < 1e-10;
}

double certify(const Form<ComplexFloat>& f, const LineH<ComplexFloat>& l) {
    auto [p, q] = l.points();
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        std::vector<cplx> z(4);
        double n = 0.0;
        cplx t = std::polar(1.0, 2.0 * M_PI * k / 5.0);
        for (std::size_t i = 0; i < 4; ++i) {
            z[i] = p[i].value() + t * q[i].value();
            n += std::norm(z[i]);
        }
        for (auto& v : z) v /= std::sqrt(n);
        worst = std::max(worst, std::abs(evaluate_complex(f, z)));
    }
    return worst;
}

/// Normalized Pluecker coordinates, used to sort lines canonically.
std::array<cplx, 6> pluecker(const LineH<ComplexFloat>& l) {
    auto [p, q] = l.points();
    std::array<cplx, 6> out;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            out[n++] = p[i].value() * q[j].value() - p[j].value() * q[i].value();
    std::size_t piv = 0;
    for (std::size_t i = 0; i < 6; ++i)
        if (std::abs(out[i]) > std::abs(out[piv]) * (1.0 + 1e-9)) piv = i;
    cplx s = out[piv];
    for (auto& x : out) x /= s;
    return out;
}

}  // namespace

template <FieldType K>
NumericLines find_lines_numeric(const Form<K>& f_in, const NumericLineOptions& opts) {
    Form<ComplexFloat> f = to_complex_form(f_in, opts.tol);
    {
        double n = 0.0;
        for (const auto& c : f.coeffs()) n += std::norm(c.value());
        f = ComplexFloat(1.0 / std::sqrt(n), 0.0, opts.tol) * f;
    }
    if (!smoothness_check(f)) throw IncompleteEnumeration("find_lines_numeric: surface is not smooth");
    NumericLines out;
    Rng base(opts.seed);
    for (std::size_t chart = 0; chart < kCharts.size() && out.lines.size() < kLineCount; ++chart) {
        Rng rng = base.split(chart);
        for (std::size_t s = 0; s < opts.starts_per_chart && out.lines.size() < kLineCount; ++s) {
            std::array<cplx, 4> x;
            for (auto& v : x) v = rng.complex_normal();
            double res = 0.0;
            if (!newton(f, chart, x, res)) continue;
            auto cl = chart_line(chart, x);
            Vec<ComplexFloat> u, v;
            for (std::size_t i = 0; i < 4; ++i) {
                u.emplace_back(cl.u[i], opts.tol);
                v.emplace_back(cl.v[i], opts.tol);
            }
            LineH<ComplexFloat> line = LineH<ComplexFloat>::through_points(u, v);
            bool dup = false;
            for (const auto& l : out.lines)
                if (line_distance(l, line) < 1e-6) dup = true;
            if (dup) continue;
            double cert = certify(f, line);
            if (cert > opts.tol) continue;
            out.max_residual = std::max(out.max_residual, cert);
            out.lines.push_back(line);
            out.solutions.push_back({chart, x, res});
        }
    }
    if (out.lines.size() != kLineCount)
        throw IncompleteEnumeration("find_lines_numeric: found " + std::to_string(out.lines.size()) +
                                    " lines, largest residual " + std::to_string(out.max_residual));
    std::vector<std::size_t> order(kLineCount);
    std::vector<std::array<cplx, 6>> keys;
    for (std::size_t i = 0; i < kLineCount; ++i) {
        order[i] = i;
        keys.push_back(pluecker(out.lines[i]));
    }
    auto rounded = [](cplx z) { return std::pair<long, long>{std::lround(z.real() * 1e6), std::lround(z.imag() * 1e6)}; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < 6; ++k) {
            auto ra = rounded(keys[a][k]), rb = rounded(keys[b][k]);
            if (ra != rb) return ra < rb;
        }
        return false;
    });
    NumericLines sorted;
    sorted.max_residual = out.max_residual;
    for (std::size_t i : order) {
        sorted.lines.push_back(out.lines[i]);
        sorted.solutions.push_back(out.solutions[i]);
        sorted.real.push_back(line_kind(out.lines[i]).kind == LineKind::Real);
    }
    return sorted;
}

template <FieldType K>
LineConfiguration<ComplexFloat> numeric_configuration(const Form<K>& f, const NumericLineOptions& opts) {
    auto nl = find_lines_numeric(f, opts);
    return configuration_from_lines(nl.lines, to_complex_form(f, opts.tol));
}

std::vector<PlaneH<ComplexFloat>> real_tritangents_through(const LineConfiguration<ComplexFloat>& cfg, std::size_t r) {
    auto conj = conjugation_map(cfg);
    std::vector<PlaneH<ComplexFloat>> out;
    std::vector<bool> used(kLineCount, false);
    for (std::size_t m = 0; m < kLineCount; ++m) {
        if (m == r || used[m] || !cfg.incidence[r][m]) continue;
        std::size_t third = third_line(cfg.incidence, r, m);
        used[m] = used[third] = true;
        if (conj[m] != third || conj[m] == m) continue;
        PlaneH<ComplexFloat> p = span_plane(cfg.lines[r], cfg.lines[m]);
        std::size_t piv = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (p[i].magnitude() > p[piv].magnitude() * (1.0 + 1e-9)) piv = i;
        ComplexFloat s = p[piv];
        for (auto& x : p) x = ComplexFloat((x / s).value().real(), 0.0, x.tol());
        out.push_back(p);
    }
    return out;
}

template <FieldType K>
std::vector<PlaneH<ComplexFloat>> real_tritangents_through(const Form<K>& f, const LineH<ComplexFloat>& r,
                                                           const NumericLineOptions& opts) {
    auto cfg = numeric_configuration(f, opts);
    std::size_t best = 0;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kLineCount; ++i) {
        double e = line_distance(cfg.lines[i], r);
        if (e < d) {
            d = e;
            best = i;
        }
    }
    if (d > 1e-6) throw std::invalid_argument("real_tritangents_through: r is not a line of the surface");
    return real_tritangents_through(cfg, best);
}

double match_line_sets(const std::vector<LineH<ComplexFloat>>& a, const std::vector<LineH<ComplexFloat>>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<std::tuple<double, std::size_t, std::size_t>> d;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) d.emplace_back(line_distance(a[i], b[j]), i, j);
    std::sort(d.begin(), d.end());
    std::vector<bool> ua(a.size(), false), ub(b.size(), false);
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& [dist, i, j] : d) {
        if (ua[i] || ub[j]) continue;
        ua[i] = ub[j] = true;
        worst = std::max(worst, dist);
        ++matched;
    }
    return matched == a.size() ? worst : std::numeric_limits<double>::infinity();
}

#define CUBICDET_INSTANTIATE_NUMLINES(K)                                                                     \
    template NumericLines find_lines_numeric(const Form<K>&, const NumericLineOptions&);                    \
    template LineConfiguration<ComplexFloat> numeric_configuration(const Form<K>&, const NumericLineOptions&); \
    template std::vector<PlaneH<ComplexFloat>> real_tritangents_through(const Form<K>&, const LineH<ComplexFloat>&, \
                                                                        const NumericLineOptions&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_NUMLINES)

}  // namespace cubicdet
