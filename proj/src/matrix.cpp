#include "cubicdet/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<ComplexFloat>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).value();
    return e;
}

struct NumericSvd {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd;
    std::size_t rank = 0;
    double tol = kDefaultTolerance;
};

NumericSvd numeric_svd(const Matrix<ComplexFloat>& m) {
    NumericSvd out;
    out.tol = matrix_tolerance(m);
    Eigen::MatrixXcd e = to_eigen(m);
    // Full V is needed for kernels of wide matrices.
    out.svd.compute(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = out.svd.singularValues();
    double smax = s.size() > 0 ? s(0) : 0.0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (smax > 0.0 && s(k) > out.tol * std::max(1.0, smax)) ++out.rank;
    }
    return out;
}

template <FieldType K>
bool negligible(const K& x, double threshold) {
    if constexpr (K::exact) {
        (void)threshold;
        return x.is_zero();
    } else {
        return x.magnitude() <= threshold;
    }
}

}  // namespace

template <FieldType K>
RowEchelon<K> rref(Matrix<K> m) {
    RowEchelon<K> out;
    double threshold = 0.0;
    if constexpr (!K::exact) {
        double scale = 0.0;
        for (const auto& x : m.data()) scale = std::max(scale, x.magnitude());
        threshold = matrix_tolerance(m) * std::max(1.0, scale);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        if constexpr (K::exact) {
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (!m(i, c).is_zero()) {
                    piv = i;
                    break;
                }
            }
        } else {
            double best = threshold;
            for (std::size_t i = r; i < m.rows(); ++i) {
                double mag = m(i, c).magnitude();
                if (mag > best) {
                    best = mag;
                    piv = i;
                }
            }
        }
        if (piv == m.rows()) {
            for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = K(0);
            continue;
        }
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        K inv = K(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || negligible(m(i, c), 0.0)) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <FieldType K>
std::size_t rank(const Matrix<K>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (K::exact) {
        return rref(m).pivots.size();
    } else {
        return numeric_svd(m).rank;
    }
}

template <FieldType K>
std::vector<Vec<K>> nullspace(const Matrix<K>& m) {
    std::vector<Vec<K>> basis;
    if constexpr (K::exact) {
        auto e = rref(m);
        std::vector<bool> is_pivot(m.cols(), false);
        for (auto p : e.pivots) is_pivot[p] = true;
        for (std::size_t free = 0; free < m.cols(); ++free) {
            if (is_pivot[free]) continue;
            Vec<K> v(m.cols(), K(0));
            v[free] = K(1);
            for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
            basis.push_back(std::move(v));
        }
    } else {
        if (m.rows() == 0) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Vec<K> v(m.cols(), K(0));
                v[j] = K(1);
                basis.push_back(v);
            }
            return basis;
        }
        auto s = numeric_svd(m);
        const auto& V = s.svd.matrixV();
        for (Eigen::Index j = static_cast<Eigen::Index>(s.rank); j < V.cols(); ++j) {
            Vec<K> v;
            v.reserve(m.cols());
            for (Eigen::Index i = 0; i < V.rows(); ++i) v.push_back(ComplexFloat(V(i, j), s.tol));
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

template <FieldType K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    if constexpr (K::exact) {
        Matrix<K> aug(m.rows(), m.cols() + 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
            aug(i, m.cols()) = b[i];
        }
        auto e = rref(aug);
        if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
        Vec<K> x(m.cols(), K(0));
        for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
        return x;
    } else {
        double tol = std::max(matrix_tolerance(m), kDefaultTolerance);
        for (const auto& x : b) tol = std::max(tol, x.tol());
        Eigen::MatrixXcd a = to_eigen(m);
        Eigen::VectorXcd rhs(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i].value();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(tol);
        Eigen::VectorXcd x = svd.solve(rhs);
        double resid = (a * x - rhs).norm();
        double scale = std::max({1.0, rhs.norm(), a.norm() * x.norm()});
        if (resid > tol * scale) return std::nullopt;
        Vec<K> out;
        for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(ComplexFloat(x(i), tol));
        return out;
    }
}

template <FieldType K>
K determinant(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    std::size_t n = m.rows();
    if (n == 0) return K(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3) {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    if constexpr (!K::exact) {
        Eigen::MatrixXcd e(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e(i, j) = m(i, j).value();
        return ComplexFloat(e.partialPivLu().determinant(), matrix_tolerance(m));
    } else {
        Matrix<K> a = m;
        K det(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = n;
            for (std::size_t i = c; i < n; ++i) {
                if (!a(i, c).is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv == n) return K(0);
            if (piv != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
                det = -det;
            }
            det = det * a(c, c);
            K inv = K(1) / a(c, c);
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a(i, c).is_zero()) continue;
                K f = a(i, c) * inv;
                for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            }
        }
        return det;
    }
}

template <FieldType K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows();
    if constexpr (K::exact) {
        Matrix<K> aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
            aug(i, n + i) = K(1);
        }
        auto e = rref(aug);
        if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
        Matrix<K> inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
        return inv;
    } else {
        if (rank(m) < n) throw std::domain_error("inverse: singular matrix");
        double tol = matrix_tolerance(m);
        Eigen::MatrixXcd inv = to_eigen(m).fullPivLu().inverse();
        Matrix<K> out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) = ComplexFloat(inv(i, j), tol);
        return out;
    }
}

template <FieldType K>
Matrix<K> row_space_basis(const Matrix<K>& m) {
    if constexpr (K::exact) {
        auto e = rref(m);
        Matrix<K> out(e.pivots.size(), m.cols());
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = e.reduced(i, j);
        return out;
    } else {
        auto s = numeric_svd(m);
        // rows of V^H for the nonzero singular values span the row space
        const auto& V = s.svd.matrixV();
        Matrix<K> out(s.rank, m.cols());
        for (std::size_t i = 0; i < s.rank; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ComplexFloat(std::conj(V(j, i)), s.tol);
        return out;
    }
}

std::vector<double> singular_values(const Matrix<ComplexFloat>& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    std::vector<double> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) out.push_back(svd.singularValues()(k));
    return out;
}

template <FieldType K>
Vec<K> normalize_projective(Vec<K> v) {
    if constexpr (K::exact) {
        for (const auto& x : v) {
            if (!x.is_zero()) {
                K inv = K(1) / x;
                for (auto& y : v) y = y * inv;
                return v;
            }
        }
        throw std::domain_error("normalize_projective: zero vector");
    } else {
        double norm = 0.0;
        std::size_t big = 0;
        double bigmag = -1.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            double mag = v[k].magnitude();
            norm += mag * mag;
            // prefer the first coordinate among near-ties so the phase choice is stable
            if (mag > bigmag * (1.0 + 1e-6)) {
                bigmag = mag;
                big = k;
            }
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::domain_error("normalize_projective: zero vector");
        std::complex<double> phase = std::conj(v[big].value()) / std::abs(v[big].value());
        for (auto& y : v) y = ComplexFloat(y.value() * phase / norm, y.tol());
        return v;
    }
}

#define CUBICDET_INSTANTIATE_MATRIX(K)                                         \
    template RowEchelon<K> rref<K>(Matrix<K>);                                 \
    template std::size_t rank<K>(const Matrix<K>&);                            \
    template std::vector<Vec<K>> nullspace<K>(const Matrix<K>&);               \
    template std::optional<Vec<K>> solve<K>(const Matrix<K>&, const Vec<K>&);  \
    template K determinant<K>(const Matrix<K>&);                               \
    template Matrix<K> inverse<K>(const Matrix<K>&);                           \
    template Matrix<K> row_space_basis<K>(const Matrix<K>&);                   \
    template Vec<K> normalize_projective<K>(Vec<K>);

CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_MATRIX)

}  // namespace cubicdet
