#include "cubicdet/numeric.hpp"

#include <algorithm>

namespace cubicdet {

std::vector<cplx> polynomial_roots(std::vector<cplx> c, double rel_tol) {
    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return {};
    while (!c.empty() && std::abs(c.back()) <= rel_tol * scale) c.pop_back();
    if (c.size() <= 1) return {};
    const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
    CMat comp = CMat::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<CMat> es(comp, false);
    std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const CMat& h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

CMat random_complex_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

}  // namespace cubicdet

namespace cubicdet {

namespace {

struct HomotopySystem {
    std::vector<CMat> target;  // (n+1)x(n+1), homogeneous quadratics U^T Q U
    CVec patch;                // patch^T U = 1
    cplx gamma;
    Eigen::Index n;

    // H(U, t) and its partial derivatives
    void eval(const CVec& u, double t, CVec& h, CMat& hu, CVec& ht) const {
        const Eigen::Index m = n + 1;
        h.resize(m);
        hu.resize(m, m);
        ht.resize(m);
        for (Eigen::Index k = 0; k < n; ++k) {
            CVec qu = target[static_cast<std::size_t>(k)] * u;
            cplx p = u.transpose() * qu;
            cplx g = u(k + 1) * u(k + 1) - u(0) * u(0);
            h(k) = (1.0 - t) * gamma * g + t * p;
            ht(k) = p - gamma * g;
            Eigen::RowVectorXcd dg = Eigen::RowVectorXcd::Zero(m);
            dg(k + 1) = 2.0 * u(k + 1);
            dg(0) = -2.0 * u(0);
            hu.row(k) = (1.0 - t) * gamma * dg + t * 2.0 * qu.transpose();
        }
        h(n) = (patch.transpose() * u)(0) - 1.0;
        hu.row(n) = patch.transpose();
        ht(n) = 0.0;
    }
};

enum class PathEnd { Finite, Failed };

/// Tracks u from t = 0 to 1; on failure t holds the last reached time.
PathEnd track(const HomotopySystem& sys, CVec& u, double& t) {
    t = 0.0;
    double dt = 0.02;
    CVec h, ht;
    CMat hu;
    auto velocity = [&](const CVec& x, double s) {
        sys.eval(x, s, h, hu, ht);
        return CVec(hu.partialPivLu().solve(-ht));
    };
    while (t < 1.0) {
        dt = std::min(dt, 1.0 - t);
        // RK4 predictor
        CVec k1 = velocity(u, t);
        CVec k2 = velocity(u + 0.5 * dt * k1, t + 0.5 * dt);
        CVec k3 = velocity(u + 0.5 * dt * k2, t + 0.5 * dt);
        CVec k4 = velocity(u + dt * k3, t + dt);
        CVec x = u + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        bool ok = x.allFinite();
        for (int it = 0; it < 4 && ok; ++it) {
            sys.eval(x, t + dt, h, hu, ht);
            CVec d = hu.partialPivLu().solve(-h);
            if (!d.allFinite()) {
                ok = false;
                break;
            }
            x += d;
            if (d.norm() <= 1e-11 * (1.0 + x.norm())) break;
            if (it == 3) ok = d.norm() <= 1e-7 * (1.0 + x.norm());
        }
        if (ok) {
            sys.eval(x, t + dt, h, hu, ht);
            ok = h.norm() <= 1e-8 * (1.0 + x.squaredNorm());
        }
        if (ok) {
            u = x;
            t += dt;
            dt = std::min(dt * 1.5, 0.05);
        } else {
            dt *= 0.5;
            if (dt < 1e-13) return PathEnd::Failed;
        }
    }
    // final Newton at t = 1
    for (int it = 0; it < 30; ++it) {
        sys.eval(u, 1.0, h, hu, ht);
        CVec d = hu.colPivHouseholderQr().solve(-h);
        if (!d.allFinite()) break;
        u += d;
        if (d.norm() <= 1e-14 * (1.0 + u.norm())) break;
    }
    return PathEnd::Finite;
}

double max_residual(const std::vector<Eigen::MatrixXd>& q, const Eigen::VectorXd& v) {
    Eigen::VectorXd w(v.size() + 1);
    w << 1.0, v;
    double r = 0.0;
    for (const auto& m : q) r = std::max(r, std::abs(w.dot(m * w)) / std::max(1.0, w.squaredNorm()));
    return r;
}

Eigen::VectorXd refine_real(const std::vector<Eigen::MatrixXd>& q, Eigen::VectorXd v) {
    const Eigen::Index n = v.size();
    for (int it = 0; it < 30; ++it) {
        Eigen::VectorXd w(n + 1);
        w << 1.0, v;
        Eigen::VectorXd r(static_cast<Eigen::Index>(q.size()));
        Eigen::MatrixXd j(static_cast<Eigen::Index>(q.size()), n);
        for (std::size_t k = 0; k < q.size(); ++k) {
            Eigen::VectorXd qw = q[k] * w;
            r(static_cast<Eigen::Index>(k)) = w.dot(qw);
            j.row(static_cast<Eigen::Index>(k)) = 2.0 * qw.tail(n).transpose();
        }
        Eigen::VectorXd d = j.colPivHouseholderQr().solve(-r);
        if (!d.allFinite()) break;
        v += d;
        if (d.norm() <= 1e-15 * (1.0 + v.norm())) break;
    }
    return v;
}

}  // namespace

QuadraticSolveResult real_quadratic_solutions(const std::vector<Eigen::MatrixXd>& q_in, Rng rng) {
    QuadraticSolveResult out;
    if (q_in.empty()) return out;
    const Eigen::Index n = q_in.front().rows() - 1;
    std::vector<Eigen::MatrixXd> q;
    for (const auto& m : q_in) {
        double s = m.norm();
        q.push_back(s > 0.0 ? Eigen::MatrixXd(m / s) : m);
    }
    if (n == 0) {
        if (max_residual(q, Eigen::VectorXd(0)) < 1e-12) out.real_solutions.emplace_back(0);
        return out;
    }
    HomotopySystem sys;
    sys.n = n;
    if (static_cast<Eigen::Index>(q.size()) == n) {
        for (const auto& m : q) sys.target.push_back(m.cast<cplx>());
    } else {
        for (Eigen::Index k = 0; k < n; ++k) {
            Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n + 1, n + 1);
            for (const auto& m : q) c += rng.normal() * m;
            sys.target.push_back(c.cast<cplx>());
        }
    }
    sys.gamma = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
    sys.patch = CVec(n + 1);
    for (Eigen::Index k = 0; k <= n; ++k) sys.patch(k) = rng.complex_normal();
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t s = 0; s < count; ++s) {
        CVec u(n + 1);
        u(0) = 1.0;
        for (Eigen::Index k = 0; k < n; ++k) u(k + 1) = (s >> k) & 1U ? -1.0 : 1.0;
        u /= (sys.patch.transpose() * u)(0);
        ++out.paths;
        double t_end = 0.0;
        if (track(sys, u, t_end) == PathEnd::Failed) {
            // paths stalling late with a vanishing affine coordinate run into
            // a singular solution set at infinity
            if (t_end > 0.9 && std::abs(u(0)) <= 1e-3 * u.norm()) {
                ++out.at_infinity;
            } else {
                ++out.failed;
            }
            continue;
        }
        if (std::abs(u(0)) <= 1e-7 * u.norm()) {
            ++out.at_infinity;
            continue;
        }
        ++out.finite;
        CVec v = u.tail(n) / u(0);
        if (v.imag().norm() > 1e-5 * (1.0 + v.norm())) continue;
        Eigen::VectorXd r = refine_real(q, v.real());
        if (max_residual(q, r) > 1e-10) continue;
        bool dup = false;
        for (const auto& x : out.real_solutions)
            if ((x - r).norm() <= 1e-6 * (1.0 + r.norm())) dup = true;
        if (!dup) out.real_solutions.push_back(r);
    }
    return out;
}

}  // namespace cubicdet
