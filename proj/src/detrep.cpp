#include "cubicdet/detrep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cubicdet/instantiate.hpp"
#include "cubicdet/surface.hpp"

namespace cubicdet {

namespace {

/// Positive row and column factors with product 1 that even out the sizes of
/// the nonzero entries; the determinant is unchanged.
template <FieldType K>
void balance_entries(std::array<std::array<PlaneH<K>, 3>, 3>& pi) {
    std::array<std::array<double, 3>, 3> lg{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            if (i == k) continue;
            double n = 0.0;
            for (const auto& c : pi[i][k]) n = std::max(n, c.magnitude());
            lg[i][k] = std::log(n);
        }
    std::array<double, 3> d{}, e{};
    for (int it = 0; it < 20; ++it) {
        for (std::size_t i = 0; i < 3; ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < 3; ++k)
                if (k != i) sum += lg[i][k] + e[k];
            d[i] = -sum / 2.0;
        }
        for (std::size_t k = 0; k < 3; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                if (i != k) sum += lg[i][k] + d[i];
            e[k] = -sum / 2.0;
        }
    }
    double shift = (d[0] + d[1] + d[2] + e[0] + e[1] + e[2]) / 6.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            if (i == k) continue;
            K f(std::exp(d[i] + e[k] - 2.0 * shift), 0.0);
            for (auto& c : pi[i][k]) c = f * c;
        }
}

}  // namespace

template <FieldType K>
RFormRep<K> rform_from_double_six(const LineConfiguration<K>& cfg, const DoubleSix& ds, const Form<K>& f) {
    if (!is_double_six(cfg.incidence, ds)) throw IdentityUnsolvable("rform_from_double_six: not a double-six");
    std::array<std::array<PlaneH<K>, 3>, 3> pi;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            pi[i][j] = i == j ? PlaneH<K>(4, K(0)) : span_plane(cfg.lines[ds.lower[i]], cfg.lines[ds.upper[j]]);
    auto lf = [&](std::size_t i, std::size_t j) { return Form<K>::linear(pi[i][j]); };
    Form<K> first = lf(0, 1) * lf(1, 2) * lf(2, 0);
    Form<K> second = lf(0, 2) * lf(1, 0) * lf(2, 1);
    auto sol = solve_combination(std::vector<Form<K>>{first, second}, f);
    if (!sol || (*sol)[0].is_zero() || (*sol)[1].is_zero())
        throw IdentityUnsolvable("rform_from_double_six: F is not a combination of the two plane triples");
    RFormRep<K> r;
    r.ds = ds;
    r.s = (*sol)[0];
    r.lambda = (*sol)[1] / (*sol)[0];
    for (auto& c : pi[0][1]) c = r.s * c;
    for (auto& c : pi[0][2]) c = (*sol)[1] * c;
    if constexpr (!K::exact) balance_entries(pi);
    r.pencil = LinearPencil<K>::from_entries(pi);
    return r;
}

template <FieldType K>
Matrix<K> forms_at_point(const LinearPencil<K>& m, const PointP2<K>& x) {
    Matrix<K> out(3, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        Vec<K> col = m.coeff(j) * x;
        for (std::size_t r = 0; r < 3; ++r) out(r, j) = col[r];
    }
    return out;
}

template <FieldType K>
LineH<K> line_of_base_point(const LinearPencil<K>& m, const PointP2<K>& x) {
    return LineH<K>::from_form_matrix(forms_at_point(m, x));
}

template <FieldType K>
std::optional<PointP2<K>> base_point_for_line(const LinearPencil<K>& m, const LineH<K>& l) {
    auto [p, q] = l.points();
    Matrix<K> a = m.at(p);
    Matrix<K> b = m.at(q);
    std::vector<Vec<K>> rows;
    for (std::size_t r = 0; r < 3; ++r) {
        rows.push_back(a.row(r));
        rows.push_back(b.row(r));
    }
    auto ker = nullspace(Matrix<K>::from_rows(rows));
    if (ker.size() != 1) return std::nullopt;
    return normalize_projective(ker.front());
}

namespace {

/// Common zeros of four plane cubics that meet in finitely many points.
std::vector<std::vector<cplx>> solve_cubic_system(const std::array<Form<ComplexFloat>, 4>& cubics, Rng rng) {
    const auto& mons = monomials(3, 3);
    CMat g = random_complex_matrix(rng, 3, 3);
    std::vector<Form<ComplexFloat>> subs;
    for (Eigen::Index k = 0; k < 3; ++k)
        subs.push_back(Form<ComplexFloat>::linear({g(k, 0), g(k, 1), g(k, 2)}));
    std::array<Form<ComplexFloat>, 4> h;
    for (std::size_t j = 0; j < 4; ++j) {
        h[j] = cubics[j].compose(subs);
        double n = 0.0;
        for (const auto& c : h[j].coeffs()) n += std::norm(c.value());
        n = std::sqrt(n);
        if (n == 0.0) throw SolveFailure("base_points: zero minor");
        h[j] = ComplexFloat(1.0 / n, 0.0) * h[j];
    }
    auto combo = [&]() {
        Form<ComplexFloat> out(3, 3);
        for (std::size_t j = 0; j < 4; ++j) out += ComplexFloat(rng.complex_normal()) * h[j];
        return out;
    };
    Form<ComplexFloat> p = combo();
    Form<ComplexFloat> q = combo();
    // coefficients in u at y = (1, t, u)
    auto in_u = [&](const Form<ComplexFloat>& f, cplx t) {
        std::array<cplx, 4> c{};
        for (std::size_t k = 0; k < mons.size(); ++k)
            c[static_cast<std::size_t>(mons[k][2])] += f.coeffs()[k].value() * std::pow(t, mons[k][1]);
        return c;
    };
    auto resultant = [&](cplx t) {
        auto a = in_u(p, t);
        auto b = in_u(q, t);
        CMat s = CMat::Zero(6, 6);
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 4; ++k) {
                s(r, r + k) = a[static_cast<std::size_t>(3 - k)];
                s(r + 3, r + k) = b[static_cast<std::size_t>(3 - k)];
            }
        return s.determinant();
    };
    const int n = 10;
    std::vector<cplx> values(n);
    for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = resultant(std::polar(1.0, 2.0 * M_PI * k / n));
    std::vector<cplx> coeffs(n);
    for (int mdeg = 0; mdeg < n; ++mdeg) {
        cplx s = 0.0;
        for (int k = 0; k < n; ++k) s += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * M_PI * k * mdeg / n);
        coeffs[static_cast<std::size_t>(mdeg)] = s / static_cast<double>(n);
    }
    auto eval_all = [&](cplx t, cplx u, CVec& res, CMat& jac) {
        std::vector<cplx> y = {1.0, t, u};
        for (std::size_t j = 0; j < 4; ++j) {
            res(static_cast<Eigen::Index>(j)) = evaluate_complex(h[j], y);
            jac(static_cast<Eigen::Index>(j), 0) = evaluate_complex(h[j].partial(1), y);
            jac(static_cast<Eigen::Index>(j), 1) = evaluate_complex(h[j].partial(2), y);
        }
    };
    std::vector<std::vector<cplx>> found;
    for (cplx t : polynomial_roots(coeffs, 1e-10)) {
        auto a = in_u(p, t);
        auto b = in_u(q, t);
        std::vector<cplx> ua(a.begin(), a.end());
        cplx best_u = 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (cplx u : polynomial_roots(ua, 1e-10)) {
            double v = std::abs(b[0] + u * (b[1] + u * (b[2] + u * b[3])));
            if (v < best) {
                best = v;
                best_u = u;
            }
        }
        cplx u = best_u;
        CVec res(4);
        CMat jac(4, 2);
        for (int it = 0; it < 12; ++it) {
            eval_all(t, u, res, jac);
            CVec d = jac.colPivHouseholderQr().solve(-res);
            t += d(0);
            u += d(1);
            if (d.norm() < 1e-15 * (1.0 + std::abs(t) + std::abs(u))) break;
        }
        eval_all(t, u, res, jac);
        double scale = std::pow(1.0 + std::abs(t) * std::abs(t) + std::abs(u) * std::abs(u), 1.5);
        if (res.cwiseAbs().maxCoeff() > 1e-9 * scale) continue;
        CVec y(3);
        y << 1.0, t, u;
        CVec x = g * y;
        Eigen::Index piv = 0;
        x.cwiseAbs().maxCoeff(&piv);
        x /= x(piv);
        std::vector<cplx> pt(x.data(), x.data() + 3);
        bool dup = false;
        for (const auto& f : found) {
            double d = 0.0;
            for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(f[k] - pt[k]));
            if (d < 1e-6) dup = true;
        }
        if (!dup) found.push_back(pt);
    }
    return found;
}

template <FieldType K>
std::optional<PointP2<K>> reconstruct_point(std::vector<cplx> x, const std::array<Form<K>, 4>& minors) {
    if constexpr (!K::exact) {
        (void)minors;
        PointP2<K> out;
        for (auto c : x) out.emplace_back(c);
        return out;
    } else {
        std::size_t first = 0;
        while (std::abs(x[first]) < 1e-8) ++first;
        cplx s = x[first];
        PointP2<K> out;
        for (auto& c : x) {
            c /= s;
            auto r = K::from_complex(c, 1e-8);
            if (!r) return std::nullopt;
            out.push_back(*r);
        }
        for (const auto& m : minors)
            if (!m.evaluate(out).is_zero()) return std::nullopt;
        return out;
    }
}

}  // namespace

template <FieldType K>
std::array<PointP2<K>, 6> base_points(const LinearPencil<K>& m, std::uint64_t seed) {
    auto minors = L_from_pencil(m).signed_minors();
    std::array<Form<ComplexFloat>, 4> cminors;
    for (std::size_t j = 0; j < 4; ++j) cminors[j] = to_complex_form(minors[j]);
    Rng base(seed);
    std::string last = "no attempt";
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        auto pts = solve_cubic_system(cminors, base.split(attempt));
        if (pts.size() != 6) {
            last = "found " + std::to_string(pts.size()) + " common zeros of the minors";
            continue;
        }
        // normalize first significant coordinate to 1 and sort
        for (auto& x : pts) {
            std::size_t f = 0;
            while (std::abs(x[f]) < 1e-8) ++f;
            cplx s = x[f];
            for (auto& c : x) c /= s;
        }
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            for (std::size_t k = 0; k < 3; ++k) {
                if (std::abs(a[k] - b[k]) < 1e-7) continue;
                if (std::abs(a[k].real() - b[k].real()) > 1e-7) return a[k].real() < b[k].real();
                return a[k].imag() < b[k].imag();
            }
            return false;
        });
        std::array<PointP2<K>, 6> out;
        bool ok = true;
        for (std::size_t i = 0; i < 6 && ok; ++i) {
            auto r = reconstruct_point<K>(pts[i], minors);
            if (!r) {
                ok = false;
                last = "base point not representable exactly in the scalar field";
            } else {
                out[i] = *r;
            }
        }
        if (ok) return out;
    }
    throw SolveFailure("base_points: " + last);
}

template <FieldType K>
std::array<std::size_t, 6> rep_line_indices(const LinearPencil<K>& m, const LineConfiguration<K>& cfg) {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < cfg.lines.size(); ++n)
        if (base_point_for_line(m, cfg.lines[n])) idx.push_back(n);
    if (idx.size() != 6)
        throw SolveFailure("rep_line_indices: pencil has " + std::to_string(idx.size()) + " lines in the configuration");
    std::array<std::size_t, 6> out;
    std::copy(idx.begin(), idx.end(), out.begin());
    return out;
}

template <FieldType K>
std::array<PointP2<K>, 6> base_points(const LinearPencil<K>& m, const LineConfiguration<K>& cfg) {
    auto idx = rep_line_indices(m, cfg);
    std::array<PointP2<K>, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = *base_point_for_line(m, cfg.lines[idx[i]]);
    return out;
}

template <FieldType K>
std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>& m, const std::array<PointP2<K>, 6>& points) {
    std::array<LineH<K>, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = line_of_base_point(m, points[i]);
    return out;
}

template <FieldType K>
std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>& m) {
    return lines_of_rep(m, base_points(m));
}

namespace {

template <FieldType K>
Matrix<K> complete_with_unit_rows(std::vector<Vec<K>> rows) {
    for (std::size_t k = 0; k < 3 && rows.size() < 3; ++k) {
        Vec<K> e(3, K(0));
        e[k] = K(1);
        auto trial = rows;
        trial.push_back(e);
        if (rank(Matrix<K>::from_rows(trial)) == trial.size()) rows = std::move(trial);
    }
    return Matrix<K>::from_rows(rows);
}

/// Row vector u with u * (column k of n) = 0.
template <FieldType K>
Vec<K> column_annihilator(const LinearPencil<K>& n, std::size_t k) {
    Matrix<K> col = Matrix<K>::from_rows({n.entry(0, k), n.entry(1, k), n.entry(2, k)});
    auto ker = left_nullspace(col);
    if (ker.size() != 1) throw IrreducibilityViolation("reduce_to_rform: column forms do not have rank 2");
    return ker.front();
}

template <FieldType K>
Matrix<K> diagonal(const std::array<K, 3>& d) {
    Matrix<K> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = d[i];
    return m;
}

template <FieldType K>
Vec<K> unit(std::size_t k) {
    Vec<K> e(3, K(0));
    e[k] = K(1);
    return e;
}


/// X, Y with X m Y = r from the kernel of the linear system X m_j = r_j W,
/// Y = W^-1; nullopt when the kernel vector gives a singular X or W.
std::optional<EquivalenceWitness<ComplexFloat>> linear_witness(const LinearPencil<ComplexFloat>& m,
                                                               const LinearPencil<ComplexFloat>& r) {
    CMat sys = CMat::Zero(36, 18);
    for (std::size_t j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                Eigen::Index row = 9 * j + 3 * i + k;
                for (int l = 0; l < 3; ++l) {
                    sys(row, 3 * i + l) = m.coeff(j)(l, k).value();
                    sys(row, 9 + 3 * l + k) = -r.coeff(j)(i, l).value();
                }
            }
    Eigen::JacobiSVD<CMat> svd(sys, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(17);
    CMat x(3, 3), w(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
            x(i, l) = v(3 * i + l);
            w(i, l) = v(9 + 3 * i + l);
        }
    Eigen::FullPivLU<CMat> lu(w);
    if (!lu.isInvertible() || Eigen::FullPivLU<CMat>(x).rank() < 3) return std::nullopt;
    CMat y = lu.inverse();
    // fix the scalar c in X m Y = c r
    cplx num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        CMat a(3, 3), b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) {
                a(i, k) = m.coeff(j)(i, k).value();
                b(i, k) = r.coeff(j)(i, k).value();
            }
        CMat t = x * a * y;
        num += (b.adjoint() * t).trace();
        den += (b.adjoint() * b).trace();
    }
    if (std::abs(num) == 0.0) return std::nullopt;
    x *= den / num;
    EquivalenceWitness<ComplexFloat> out{Matrix<ComplexFloat>(3, 3), Matrix<ComplexFloat>(3, 3)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            out.X(i, k) = ComplexFloat(x(i, k));
            out.Y(i, k) = ComplexFloat(y(i, k));
        }
    return out;
}

/// Gauss-Newton on X m Y = r in floating point; returns the polished witness.
EquivalenceWitness<ComplexFloat> polish_witness(const LinearPencil<ComplexFloat>& m,
                                                const LinearPencil<ComplexFloat>& r,
                                                EquivalenceWitness<ComplexFloat> w) {
    auto to_cmat = [](const Matrix<ComplexFloat>& a) {
        CMat e(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) e(i, k) = a(i, k).value();
        return e;
    };
    CMat x = to_cmat(w.X), y = to_cmat(w.Y);
    std::array<CMat, 4> mj, rj;
    for (std::size_t j = 0; j < 4; ++j) {
        mj[j] = to_cmat(m.coeff(j));
        rj[j] = to_cmat(r.coeff(j));
    }
    auto residual = [&](const CMat& xx, const CMat& yy) {
        Eigen::VectorXcd out(36);
        for (std::size_t j = 0; j < 4; ++j) {
            CMat d = xx * mj[j] * yy - rj[j];
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) out(9 * j + 3 * i + k) = d(i, k);
        }
        return out;
    };
    for (int it = 0; it < 40; ++it) {
        Eigen::VectorXcd res = residual(x, y);
        if (res.norm() == 0.0) break;
        CMat jac = CMat::Zero(36, 18);
        for (std::size_t j = 0; j < 4; ++j) {
            CMat my = mj[j] * y;
            CMat xm = x * mj[j];
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                    Eigen::Index row = 9 * j + 3 * i + k;
                    // d/dX(i,l) of (X M Y)(i,k) is (M Y)(l,k); d/dY(l,k) is (X M)(i,l)
                    for (int l = 0; l < 3; ++l) {
                        jac(row, 3 * i + l) = my(l, k);
                        jac(row, 9 + 3 * l + k) = xm(i, l);
                    }
                }
        }
        Eigen::VectorXcd step = jac.completeOrthogonalDecomposition().solve(-res);
        bool improved = false;
        for (double t = 1.0; t > 1e-3 && !improved; t /= 2.0) {
            CMat nx = x, ny = y;
            for (int i = 0; i < 3; ++i)
                for (int l = 0; l < 3; ++l) {
                    nx(i, l) += t * step(3 * i + l);
                    ny(i, l) += t * step(9 + 3 * i + l);
                }
            if (residual(nx, ny).norm() < res.norm()) {
                x = nx;
                y = ny;
                improved = true;
            }
        }
        if (!improved) break;
    }
    auto back = [](const CMat& e) {
        Matrix<ComplexFloat> a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) a(i, k) = ComplexFloat(e(i, k));
        return a;
    };
    return {back(x), back(y)};
}

}  // namespace

template <FieldType K>
bool witness_holds(const LinearPencil<K>& m1, const LinearPencil<K>& m2, const EquivalenceWitness<K>& w) {
    if constexpr (K::exact) {
        return m1.transformed(w.X, w.Y) == m2;
    } else {
        auto norm = [](const Matrix<K>& a) {
            double n = 0.0;
            for (const auto& x : a.data()) n += std::norm(x.value());
            return std::sqrt(n);
        };
        double diff = 0.0, scale = 0.0, target = 0.0;
        auto t = m1.transformed(w.X, w.Y);
        for (std::size_t j = 0; j < 4; ++j) {
            diff += std::pow(norm(t.coeff(j) - m2.coeff(j)), 2);
            scale += std::pow(norm(m1.coeff(j)), 2);
            target += std::pow(norm(m2.coeff(j)), 2);
        }
        scale = std::max(std::sqrt(scale) * norm(w.X) * norm(w.Y), std::sqrt(target));
        double tol = 1e-8;
        if (!m2.coeff(0).data().empty()) tol = std::max(kDefaultTolerance, m2.coeff(0).data().front().tol());
        return std::sqrt(diff) <= tol * scale;
    }
}

template <FieldType K>
Reduction<K> reduce_to_rform(const LinearPencil<K>& m, const LineConfiguration<K>& cfg,
                             const std::optional<RFormRep<K>>& target) {
    auto idx = rep_line_indices(m, cfg);
    std::set<std::size_t> lines(idx.begin(), idx.end());
    RFormRep<K> r;
    if (target) {
        if (std::set<std::size_t>(target->ds.upper.begin(), target->ds.upper.end()) != lines)
            throw std::invalid_argument("reduce_to_rform: target has different lines");
        r = *target;
    } else {
        std::optional<DoubleSix> found;
        for (const auto& ds : double_sixes(cfg)) {
            if (std::set<std::size_t>(ds.upper.begin(), ds.upper.end()) == lines) found = ds;
            if (std::set<std::size_t>(ds.lower.begin(), ds.lower.end()) == lines) found = ds.swapped();
            if (found) break;
        }
        if (!found) throw BadConfiguration("reduce_to_rform: lines of M are not half of a double-six");
        r = rform_from_double_six(cfg, *found, cfg.surface);
    }
    std::vector<Vec<K>> cols;
    for (std::size_t k = 0; k < 3; ++k) {
        auto p = base_point_for_line(m, cfg.lines[r.ds.upper[k]]);
        if (!p) throw SolveFailure("reduce_to_rform: missing base point");
        cols.push_back(*p);
    }
    const Matrix<K> b = Matrix<K>::from_columns(cols);
    const Matrix<K> id = Matrix<K>::identity(3);
    LinearPencil<K> n = m.transformed(id, b);

    Matrix<K> a1 = complete_with_unit_rows<K>({column_annihilator(n, 0)});
    n = n.transformed(a1, id);
    Vec<K> v = column_annihilator(n, 1);
    if (rank(Matrix<K>::from_rows({unit<K>(0), v})) != 2)
        throw IrreducibilityViolation("reduce_to_rform: entry (1,2) vanishes");
    Matrix<K> a2 = complete_with_unit_rows<K>({unit<K>(0), v});
    n = n.transformed(a2, id);
    Vec<K> w = column_annihilator(n, 2);
    if (w[2].is_zero()) throw IrreducibilityViolation("reduce_to_rform: cannot clear entry (3,3)");
    Matrix<K> a3 = Matrix<K>::from_rows({unit<K>(0), unit<K>(1), w});
    n = n.transformed(a3, id);
    if (!n.is_zero_diagonal()) throw IrreducibilityViolation("reduce_to_rform: diagonal did not vanish");

    // n(i,k) = rho(i,k) * target(i,k)
    std::array<std::array<K, 3>, 3> rho;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            if (i == k) continue;
            auto s = proportionality(Form<K>::linear(r.pencil.entry(i, k)), Form<K>::linear(n.entry(i, k)));
            if (!s || s->is_zero())
                throw IrreducibilityViolation("reduce_to_rform: entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(k + 1) + ") is not the expected tritangent plane");
            rho[i][k] = *s;
        }
    std::array<K, 3> x{K(1), K(0), K(0)}, y;
    y[1] = K(1) / rho[0][1];
    y[2] = K(1) / rho[0][2];
    x[1] = K(1) / (rho[1][2] * y[2]);
    x[2] = K(1) / (rho[2][1] * y[1]);
    y[0] = K(1) / (rho[1][0] * x[1]);
    if (!(x[2] * rho[2][0] * y[0] == K(1))) throw IrreducibilityViolation("reduce_to_rform: inconsistent scaling");

    Reduction<K> out;
    out.witness.X = diagonal(x) * a3 * a2 * a1;
    out.witness.Y = b * diagonal(y);
    out.rform = r;
    if constexpr (!K::exact) {
        if (!witness_holds(m, r.pencil, out.witness))
            if (auto lw = linear_witness(m, r.pencil)) out.witness = *lw;
        out.witness = polish_witness(m, r.pencil, out.witness);
    }
    if (!witness_holds(m, r.pencil, out.witness))
        throw IrreducibilityViolation("reduce_to_rform: witness does not reproduce the target");
    return out;
}

template <FieldType K>
bool equivalent(const LinearPencil<K>& m1, const LinearPencil<K>& m2) {
    auto l1 = lines_of_rep(m1);
    auto l2 = lines_of_rep(m2);
    for (const auto& l : l1)
        if (std::none_of(l2.begin(), l2.end(), [&](const LineH<K>& o) { return o == l; })) return false;
    return true;
}

template <FieldType K>
bool equivalent(const LinearPencil<K>& m1, const LinearPencil<K>& m2, const LineConfiguration<K>& cfg) {
    return rep_line_indices(m1, cfg) == rep_line_indices(m2, cfg);
}

template <FieldType K>
std::optional<EquivalenceWitness<K>> equivalence_witness(const LinearPencil<K>& m1, const LinearPencil<K>& m2,
                                                         const LineConfiguration<K>& cfg) {
    if (!equivalent(m1, m2, cfg)) return std::nullopt;
    auto r1 = reduce_to_rform(m1, cfg);
    auto r2 = reduce_to_rform(m2, cfg, std::optional<RFormRep<K>>(r1.rform));
    EquivalenceWitness<K> w{inverse(r2.witness.X) * r1.witness.X, r1.witness.Y * inverse(r2.witness.Y)};
    if constexpr (!K::exact) {
        if (!witness_holds(m1, m2, w))
            if (auto lw = linear_witness(m1, m2)) w = *lw;
        w = polish_witness(m1, m2, w);
    }
    if (!witness_holds(m1, m2, w)) throw IrreducibilityViolation("equivalence_witness: check failed");
    return w;
}

template <FieldType K>
AdjugateMatrix<K> adjugate(const LinearPencil<K>& m) {
    AdjugateMatrix<K> adj;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
            std::size_t c0 = k == 0 ? 1 : 0, c1 = k == 2 ? 1 : 2;
            Form<K> minor = m.entry_form(r0, c0) * m.entry_form(r1, c1) - m.entry_form(r0, c1) * m.entry_form(r1, c0);
            adj[k][i] = (i + k) % 2 == 0 ? minor : -minor;
        }
    const Form<K> det = det_pencil(m);
    const Form<K> zero(4, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l) {
            Form<K> s(4, 3);
            for (std::size_t k = 0; k < 3; ++k) s += m.entry_form(i, k) * adj[k][l];
            if (!(s == (i == l ? det : zero))) throw std::logic_error("adjugate: identity M adj = det Id fails");
        }
    return adj;
}

template <FieldType K>
std::size_t adjugate_rank_at(const AdjugateMatrix<K>& adj, const std::vector<cplx>& z, double tol) {
    CMat a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = evaluate_complex(adj[i][k], z);
    Eigen::JacobiSVD<CMat> svd(a);
    const auto& sv = svd.singularValues();
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol * std::max(1.0, sv(0))) ++r;
    return r;
}

template <FieldType K>
std::vector<std::vector<cplx>> surface_sample_points(const Form<K>& f, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<cplx>> out;
    while (out.size() < count) {
        std::vector<cplx> p(4), q(4);
        for (auto& c : p) c = rng.complex_normal();
        for (auto& c : q) c = rng.complex_normal();
        auto at = [&](cplx t) {
            std::vector<cplx> z(4);
            for (std::size_t k = 0; k < 4; ++k) z[k] = p[k] + t * q[k];
            return z;
        };
        std::vector<cplx> c(4);
        for (int mdeg = 0; mdeg < 4; ++mdeg)
            for (int k = 0; k < 4; ++k)
                c[static_cast<std::size_t>(mdeg)] +=
                    evaluate_complex(f, at(std::polar(1.0, M_PI * k / 2))) * std::polar(0.25, -M_PI * k * mdeg / 2);
        for (cplx t : polynomial_roots(c)) {
            auto z = at(t);
            double n = 0.0;
            for (auto v : z) n += std::norm(v);
            for (auto& v : z) v /= std::sqrt(n);
            out.push_back(z);
            if (out.size() == count) break;
        }
    }
    return out;
}

int divisor_degree(const DivisorClass& d) {
    int s = 3 * d.alpha;
    for (int b : d.beta) s -= b;
    return s;
}

int divisor_genus(const DivisorClass& d) {
    int self = d.alpha * d.alpha;
    for (int b : d.beta) self -= b * b;
    int twice = self - divisor_degree(d);
    if (twice % 2 != 0) throw NonIntegerGenus("divisor_genus: D^2 - d is odd");
    return twice / 2 + 1;
}

std::vector<DivisorClass> enumerate_72_classes() {
    std::vector<DivisorClass> out;
    for (int alpha = 1; alpha <= 5; ++alpha) {
        DivisorClass d;
        d.alpha = alpha;
        const int bound = alpha;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == 6) {
                if (divisor_degree(d) == 3 && divisor_genus(d) == 0) out.push_back(d);
                return;
            }
            for (int b = -bound; b <= bound; ++b) {
                d.beta[i] = b;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<int, 6> beta_pattern(const DivisorClass& d) {
    auto p = d.beta;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

template <FieldType K>
TwistedCubicSystem<K> twisted_cubic_system(const LinearPencil<K>& m) {
    auto adj = adjugate(m);
    TwistedCubicSystem<K> t;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i) t.columns[k][i] = adj[i][k];
    t.divisor_class = DivisorClass{5, {2, 2, 2, 2, 2, 2}};
    return t;
}

namespace {

template <FieldType K>
std::vector<PointP3<K>> points_on_line(const LineH<K>& l) {
    auto [p, q] = l.points();
    std::vector<PointP3<K>> out;
    for (long t : {0L, 1L, -1L, 2L}) {
        PointP3<K> x(4);
        for (std::size_t i = 0; i < 4; ++i) x[i] = p[i] + K(t) * q[i];
        out.push_back(x);
    }
    out.push_back(q);
    return out;
}

}  // namespace

template <FieldType K>
std::vector<DegenerateTwistedCubic<K>> degenerate_twisted_cubics(const LinearPencil<K>& m,
                                                                 const LineConfiguration<K>& cfg) {
    auto sys = twisted_cubic_system(m);
    auto six = rep_line_indices(m, cfg);
    DoubleSix ds = complete_half(cfg, six);
    std::vector<DegenerateTwistedCubic<K>> out;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            DegenerateTwistedCubic<K> d;
            d.i = i;
            d.j = j;
            d.lines = {ds.lower[i], ds.lower[j], third_line(cfg.incidence, ds.upper[i], ds.lower[j])};
            std::vector<Vec<K>> rows;
            for (std::size_t l : d.lines)
                for (const auto& x : points_on_line(cfg.lines[l]))
                    for (std::size_t r = 0; r < 3; ++r) {
                        Vec<K> row(3);
                        for (std::size_t k = 0; k < 3; ++k) row[k] = sys.columns[k][r].evaluate(x);
                        rows.push_back(row);
                    }
            auto ker = nullspace(Matrix<K>::from_rows(rows));
            if (ker.size() != 1)
                throw BadConfiguration("degenerate_twisted_cubics: expected a unique member through b" +
                                       std::to_string(i + 1) + " + b" + std::to_string(j + 1) + " + c" +
                                       std::to_string(i + 1) + std::to_string(j + 1));
            d.combination = normalize_projective(ker.front());
            out.push_back(d);
        }
    return out;
}

template <FieldType K>
std::vector<RFormRep<K>> all_representations(const LineConfiguration<K>& cfg, const Form<K>& f) {
    std::vector<RFormRep<K>> out;
    for (const auto& ds : double_sixes(cfg)) {
        out.push_back(rform_from_double_six(cfg, ds, f));
        out.push_back(rform_from_double_six(cfg, ds.swapped(), f));
    }
    return out;
}

#define CUBICDET_INSTANTIATE_DETREP(K)                                                                              \
    template RFormRep<K> rform_from_double_six(const LineConfiguration<K>&, const DoubleSix&, const Form<K>&);     \
    template Matrix<K> forms_at_point(const LinearPencil<K>&, const PointP2<K>&);                                 \
    template LineH<K> line_of_base_point(const LinearPencil<K>&, const PointP2<K>&);                              \
    template std::optional<PointP2<K>> base_point_for_line(const LinearPencil<K>&, const LineH<K>&);              \
    template std::array<PointP2<K>, 6> base_points(const LinearPencil<K>&, std::uint64_t);                        \
    template std::array<PointP2<K>, 6> base_points(const LinearPencil<K>&, const LineConfiguration<K>&);          \
    template std::array<std::size_t, 6> rep_line_indices(const LinearPencil<K>&, const LineConfiguration<K>&);    \
    template bool witness_holds(const LinearPencil<K>&, const LinearPencil<K>&, const EquivalenceWitness<K>&);   \
    template std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>&, const std::array<PointP2<K>, 6>&);      \
    template std::array<LineH<K>, 6> lines_of_rep(const LinearPencil<K>&);                                        \
    template Reduction<K> reduce_to_rform(const LinearPencil<K>&, const LineConfiguration<K>&,                    \
                                          const std::optional<RFormRep<K>>&);                                     \
    template bool equivalent(const LinearPencil<K>&, const LinearPencil<K>&);                                     \
    template bool equivalent(const LinearPencil<K>&, const LinearPencil<K>&, const LineConfiguration<K>&);        \
    template std::optional<EquivalenceWitness<K>> equivalence_witness(const LinearPencil<K>&,                     \
                                                                      const LinearPencil<K>&,                     \
                                                                      const LineConfiguration<K>&);               \
    template AdjugateMatrix<K> adjugate(const LinearPencil<K>&);                                                  \
    template std::size_t adjugate_rank_at(const AdjugateMatrix<K>&, const std::vector<cplx>&, double);            \
    template std::vector<std::vector<cplx>> surface_sample_points(const Form<K>&, std::size_t, std::uint64_t);    \
    template TwistedCubicSystem<K> twisted_cubic_system(const LinearPencil<K>&);                                  \
    template std::vector<DegenerateTwistedCubic<K>> degenerate_twisted_cubics(const LinearPencil<K>&,             \
                                                                              const LineConfiguration<K>&);       \
    template std::vector<RFormRep<K>> all_representations(const LineConfiguration<K>&, const Form<K>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_DETREP)

}  // namespace cubicdet
