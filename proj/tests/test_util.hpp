#pragma once

#include <cmath>
#include <string>

#include "cubicdet/numeric.hpp"
#include "cubicdet/pencil.hpp"
#include "cubicdet/projective.hpp"

namespace cubicdet {

/// Line from a string like "1w00/001w": two rows of plane coefficients over
/// {0, 1, w} with w a primitive cube root of unity.
inline LineH<Eisenstein> eisenstein_line(const std::string& s) {
    auto coeff = [](char c) {
        if (c == 'w') return Eisenstein::omega();
        if (c == 'W') return Eisenstein::omega() * Eisenstein::omega();
        return Eisenstein(static_cast<long>(c - '0'));
    };
    PlaneH<Eisenstein> p, q;
    for (std::size_t i = 0; i < 4; ++i) {
        p.push_back(coeff(s[i]));
        q.push_back(coeff(s[5 + i]));
    }
    return LineH<Eisenstein>(p, q);
}

inline std::vector<LineH<Eisenstein>> fermat_paper_lines() {
    std::vector<LineH<Eisenstein>> out;
    for (const char* s :
         {"1100/0011", "1100/001w", "1100/00w1", "1w00/0011", "1w00/001w", "1w00/00w1", "w100/0011", "w100/001w",
          "w100/00w1", "1010/0101", "1010/010w", "1010/0w01", "10w0/0101", "10w0/010w", "10w0/0w01", "w010/0101",
          "w010/010w", "w010/0w01", "1001/0110", "1001/01w0", "1001/0w10", "100w/0110", "100w/01w0", "100w/0w10",
          "w001/0110", "w001/01w0", "w001/0w10"})
        out.push_back(eisenstein_line(s));
    return out;
}

/// Pencil with entries given as 4-vectors of plane coefficients.
inline LinearPencil<Eisenstein> eisenstein_pencil(const std::array<std::array<std::string, 3>, 3>& e) {
    auto form = [](const std::string& s) {
        PlaneH<Eisenstein> f;
        for (char c : s) {
            if (c == 'w')
                f.push_back(Eisenstein::omega());
            else if (c == 'W')
                f.push_back(Eisenstein::omega() * Eisenstein::omega());
            else
                f.push_back(Eisenstein(static_cast<long>(c - '0')));
        }
        return f;
    };
    std::array<std::array<PlaneH<Eisenstein>, 3>, 3> entries;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) entries[i][k] = form(e[i][k]);
    return LinearPencil<Eisenstein>::from_entries(entries);
}

/// [[0, z0+z1, z2+z3], [w z2+z3, 0, z0+w z1], [w z0+z1, z2+w z3, 0]]
inline LinearPencil<Eisenstein> fermat_pencil_eq6() {
    return eisenstein_pencil({{{"0000", "1100", "0011"}, {"00w1", "0000", "1w00"}, {"w100", "001w", "0000"}}});
}

}  // namespace cubicdet

namespace cubicdet {

inline LinearPencil<Eisenstein> fermat_pencil_prime() {
    return eisenstein_pencil({{{"0000", "001w", "1w00"}, {"w100", "0000", "0011"}, {"00w1", "1100", "0000"}}});
}

/// The two printed self-adjoint representations of the Fermat cubic.
inline LinearPencil<Eisenstein> example_u1() {
    return eisenstein_pencil({{{"0000", "00W1", "W100"}, {"00w1", "1100", "0000"}, {"w100", "0000", "0011"}}});
}

inline LinearPencil<Eisenstein> example_u2() {
    return eisenstein_pencil({{{"3003", "WWwW", "1w11"}, {"wwWw", "1100", "0000"}, {"1W11", "0000", "0011"}}});
}

inline LinearPencil<Eisenstein> fermat_pencil_double_prime() {
    return eisenstein_pencil({{{"0000", "w11w", "w1W1"}, {"wW11", "0000", "w001"}, {"1www", "0110", "0000"}}});
}

inline PointP2<Eisenstein> eisenstein_point(const std::string& s) {
    PointP2<Eisenstein> p;
    for (char c : s) {
        if (c == 'w')
            p.push_back(Eisenstein::omega());
        else if (c == 'W')
            p.push_back(Eisenstein::omega() * Eisenstein::omega());
        else
            p.push_back(Eisenstein(static_cast<long>(c - '0')));
    }
    return p;
}

template <class Range, class T>
bool contains_projectively(const Range& r, const T& x) {
    for (const auto& y : r)
        if (projectively_equal(y, x)) return true;
    return false;
}

template <class Range, class T>
bool contains_line(const Range& r, const T& x) {
    for (const auto& y : r)
        if (y == x) return true;
    return false;
}

}  // namespace cubicdet

namespace cubicdet {

inline PointP2<Eisenstein> unit_point(std::size_t k) {
    PointP2<Eisenstein> p(3, Eisenstein(0));
    p[k] = Eisenstein(1);
    return p;
}

}  // namespace cubicdet

namespace cubicdet {

/// Pencil from complex coefficient matrices c[j] of z_j, averaged with the
/// conjugate transpose (printed data is rounded).
inline LinearPencil<ComplexFloat> hermitian_pencil(const std::array<std::array<std::array<cplx, 3>, 3>, 4>& c) {
    std::array<Matrix<ComplexFloat>, 4> m;
    for (std::size_t j = 0; j < 4; ++j) {
        m[j] = Matrix<ComplexFloat>(3, 3);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) m[j](a, b) = ComplexFloat(0.5 * (c[j][a][b] + std::conj(c[j][b][a])));
    }
    return LinearPencil<ComplexFloat>(m);
}

/// The printed definite representation of the F5 surface.
inline LinearPencil<ComplexFloat> f5_printed_definite() {
    const cplx i(0.0, 1.0);
    const cplx c = 1.0 / (28.68441 * (1.0 - i));
    const double s = std::sqrt(6.0) / 10.0;
    std::array<std::array<std::array<cplx, 3>, 3>, 4> m{};
    m[0][0][0] = -1.0;
    m[2][0][0] = -0.98987;
    m[3][0][0] = -0.01519;
    m[0][0][2] = 2.04124 * c;
    m[1][0][2] = -i * c;
    m[3][0][2] = 8.14425 * c;
    m[0][2][0] = 2.04124 * std::conj(c);
    m[1][2][0] = i * std::conj(c);
    m[3][2][0] = 8.14425 * std::conj(c);
    m[2][1][1] = -2.0;
    m[3][1][1] = 3.0;
    m[0][1][2] = (1.0 + i) / 2.0;
    m[1][1][2] = (1.0 - i) * s;
    m[0][2][1] = (1.0 - i) / 2.0;
    m[1][2][1] = (1.0 + i) * s;
    m[3][2][2] = -0.02020;
    return hermitian_pencil(m);
}

/// The printed indefinite representation U' of the F5 surface.
inline LinearPencil<ComplexFloat> f5_printed_uprime() {
    const cplx i(0.0, 1.0);
    std::array<std::array<std::array<cplx, 3>, 3>, 4> m{};
    m[0] = {{{-0.09032, 2.04691 * i, 0.08361}, {-2.04691 * i, -0.16722, 0.02718 * i}, {0.08361, -0.02719 * i, -1.0}}};
    m[1] = {{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
    m[2] = {{{-0.00662, -0.01360 * i, -0.58361}, {0.01361 * i, 0.00055, 0.0}, {-0.58361, 0.0, -1.0}}};
    m[3] = {{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}}};
    return hermitian_pencil(m);
}

}  // namespace cubicdet
