#pragma once

// Floating point helpers: seeded randomness, univariate roots, Hermitian
// eigenvalues.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace cubicdet {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Deterministic random source. Streams derived with split() are independent
/// of the order in which they are consumed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
    double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    cplx complex_normal() { return {normal(), normal()}; }
    std::uint64_t next() { return engine_(); }
    Rng split(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL))); }
    std::uint64_t seed() const { return seed_; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Roots of sum_k c[k] t^k. Leading coefficients below rel_tol * max|c| are dropped.
std::vector<cplx> polynomial_roots(std::vector<cplx> c, double rel_tol = 1e-12);

/// Eigenvalues (ascending) of a Hermitian matrix; only the lower triangle is read.
Eigen::VectorXd hermitian_eigenvalues(const CMat& h);

/// Random complex matrix with standard normal entries.
CMat random_complex_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

}  // namespace cubicdet

namespace cubicdet {

struct QuadraticSolveResult {
    /// Real solutions v of w^T Q_k w = 0 for all k, with w = (1, v).
    std::vector<Eigen::VectorXd> real_solutions;
    std::size_t paths = 0;
    std::size_t finite = 0;
    std::size_t at_infinity = 0;
    std::size_t failed = 0;
};

/// Real solutions of a system of inhomogeneous real quadratics in n unknowns,
/// each given as a symmetric (n+1)x(n+1) matrix acting on w = (1, v). When
/// there are more equations than unknowns, n random combinations are solved
/// and the candidates are checked against all equations. Uses a projective
/// total-degree homotopy with a random gamma.
QuadraticSolveResult real_quadratic_solutions(const std::vector<Eigen::MatrixXd>& q, Rng rng);

}  // namespace cubicdet
