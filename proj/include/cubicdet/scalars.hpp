#pragma once

// Field types used by every geometric routine in the library.
//
// Four concrete fields are provided:
//   Rational     - exact Q (arbitrary precision)
//   Gaussian     - exact Q(i), stored as re + im*i
//   Eisenstein   - exact Q(w), w a primitive cube root of unity, stored as a + b*w
//   ComplexFloat - double precision complex number with a comparison tolerance
//
// All downstream code is templated on the field type K; the members used
// generically are listed in the FieldType concept at the bottom.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cubicdet {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Rational {
  public:
    static constexpr bool exact = true;

    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(std::string_view text);
    std::string str() const;

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_real() const { return true; }
    int sign() const { return sgn(q_); }
    Rational conj() const { return *this; }
    double to_double() const { return q_.get_d(); }
    std::complex<double> to_complex() const { return {q_.get_d(), 0.0}; }
    double magnitude() const { return std::abs(q_.get_d()); }

    /// Best rational approximation with denominator <= max_den, if within tol.
    static std::optional<Rational> approximate(double x, double tol, long max_den = 10000000);
    static std::optional<Rational> from_complex(std::complex<double> z, double tol);
    /// Square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  private:
    mpq_class q_{0};
};

class Gaussian {
  public:
    static constexpr bool exact = true;

    Gaussian() = default;
    Gaussian(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

    static Gaussian i() { return {Rational(0), Rational(1)}; }
    static Gaussian parse(std::string_view text);
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    Gaussian conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    double magnitude() const { return std::abs(to_complex()); }
    static std::optional<Gaussian> from_complex(std::complex<double> z, double tol);
    /// An element equal to its own negated conjugate (used where c/conj(c) = -1 is needed).
    static Gaussian imaginary_unit() { return i(); }

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  private:
    Rational re_;
    Rational im_;
};

/// a + b*w with w^2 = -1 - w.
class Eisenstein {
  public:
    static constexpr bool exact = true;

    Eisenstein() = default;
    Eisenstein(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational a, Rational b = Rational()) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }
    static Eisenstein parse(std::string_view text);
    std::string str() const;

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_real() const { return b_.is_zero(); }
    Eisenstein conj() const { return {a_ - b_, -b_}; }
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    std::complex<double> to_complex() const;
    double magnitude() const { return std::abs(to_complex()); }
    static std::optional<Eisenstein> from_complex(std::complex<double> z, double tol);
    /// 1 + 2w = i*sqrt(3).
    static Eisenstein imaginary_unit() { return {Rational(1), Rational(2)}; }

    Eisenstein& operator+=(const Eisenstein& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Eisenstein& operator-=(const Eisenstein& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Eisenstein& operator*=(const Eisenstein& o);
    Eisenstein& operator/=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
    friend Eisenstein operator/(Eisenstein x, const Eisenstein& y) { return x /= y; }
    friend Eisenstein operator-(const Eisenstein& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  private:
    Rational a_;
    Rational b_;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Complex double with a comparison tolerance. Binary operations keep the
/// larger of the two tolerances.
class ComplexFloat {
  public:
    static constexpr bool exact = false;

    ComplexFloat() = default;
    ComplexFloat(long n) : z_(static_cast<double>(n), 0.0) {}  // NOLINT(google-explicit-constructor)
    ComplexFloat(std::complex<double> z, double tol = kDefaultTolerance);  // NOLINT
    ComplexFloat(double re, double im, double tol = kDefaultTolerance) : ComplexFloat({re, im}, tol) {}

    static ComplexFloat i() { return {0.0, 1.0}; }
    static ComplexFloat parse(std::string_view text, double tol = kDefaultTolerance);
    std::string str() const;

    std::complex<double> value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    double tol() const { return tol_; }
    ComplexFloat with_tol(double tol) const { return {z_, tol}; }

    bool is_zero() const { return std::abs(z_) <= tol_; }
    bool is_real() const { return std::abs(z_.imag()) <= tol_ * std::max(1.0, std::abs(z_)); }
    ComplexFloat conj() const { return {std::conj(z_), tol_}; }
    std::complex<double> to_complex() const { return z_; }
    double magnitude() const { return std::abs(z_); }
    static std::optional<ComplexFloat> from_complex(std::complex<double> z, double tol) { return ComplexFloat(z, tol); }
    static ComplexFloat imaginary_unit() { return i(); }

    ComplexFloat& operator+=(const ComplexFloat& o) { z_ += o.z_; tol_ = std::max(tol_, o.tol_); return *this; }
    ComplexFloat& operator-=(const ComplexFloat& o) { z_ -= o.z_; tol_ = std::max(tol_, o.tol_); return *this; }
    ComplexFloat& operator*=(const ComplexFloat& o) { z_ *= o.z_; tol_ = std::max(tol_, o.tol_); return *this; }
    ComplexFloat& operator/=(const ComplexFloat& o);

    friend ComplexFloat operator+(ComplexFloat a, const ComplexFloat& b) { return a += b; }
    friend ComplexFloat operator-(ComplexFloat a, const ComplexFloat& b) { return a -= b; }
    friend ComplexFloat operator*(ComplexFloat a, const ComplexFloat& b) { return a *= b; }
    friend ComplexFloat operator/(ComplexFloat a, const ComplexFloat& b) { return a /= b; }
    friend ComplexFloat operator-(const ComplexFloat& a) { return {-a.z_, a.tol_}; }
    /// |a-b| <= tol * max(1, |a|, |b|)
    friend bool operator==(const ComplexFloat& a, const ComplexFloat& b);

  private:
    std::complex<double> z_{0.0, 0.0};
    double tol_ = kDefaultTolerance;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const Gaussian& x);
std::ostream& operator<<(std::ostream& os, const Eisenstein& x);
std::ostream& operator<<(std::ostream& os, const ComplexFloat& x);

template <class K>
concept FieldType = requires(const K a, const K b) {
    { K::exact } -> std::convertible_to<bool>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_real() } -> std::convertible_to<bool>;
    { a.conj() } -> std::same_as<K>;
    { a.to_complex() } -> std::same_as<std::complex<double>>;
    { a.magnitude() } -> std::convertible_to<double>;
    { a.str() } -> std::convertible_to<std::string>;
};

/// Tolerance carried by a value; zero for exact fields.
template <FieldType K>
double tolerance_of(const K& x) {
    if constexpr (K::exact) {
        (void)x;
        return 0.0;
    } else {
        return x.tol();
    }
}

/// Converts a complex approximation to K. Exact fields reconstruct small
/// rationals and return nullopt when the value is not close to one.
template <FieldType K>
std::optional<K> field_from_complex(std::complex<double> z, double tol) {
    return K::from_complex(z, tol);
}

/// Tagged scalar used at the serialization boundary.
using Scalar = std::variant<Rational, Gaussian, Eisenstein, ComplexFloat>;

enum class ScalarKind { RationalQ, GaussianQ, EisensteinQ, ComplexFloat };

ScalarKind kind_of(const Scalar& s);
Scalar conj(const Scalar& s);
/// Throws std::invalid_argument when the variants differ.
bool scalar_eq(const Scalar& a, const Scalar& b);
std::string to_string(const Scalar& s);
/// Accepts "p/q", "p/q+r/s*i", "p/q+r/s*w" and "re,im".
Scalar parse_scalar(std::string_view text);

}  // namespace cubicdet
