#include "cubicdet/scalars.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cubicdet {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Splits "a+b*u" / "a-b*u" / "b*u" / "a" into rational parts.
std::pair<Rational, Rational> parse_extension(std::string_view text, char unit) {
    text = trim(text);
    const std::string suffix = std::string("*") + unit;
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
        return {Rational::parse(text), Rational()};
    }
    std::string_view body = text.substr(0, text.size() - suffix.size());
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(), Rational::parse(body)};
    std::string_view real = body.substr(0, split);
    std::string_view imag = body.substr(split);
    if (imag.front() == '+') imag.remove_prefix(1);
    return {Rational::parse(real), Rational::parse(imag)};
}

std::string format_extension(const Rational& a, const Rational& b, char unit) {
    std::string out = a.str();
    if (b.sign() < 0) {
        out += "-" + (-b).str();
    } else {
        out += "+" + b.str();
    }
    out += "*";
    out += unit;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    return q_.get_str(10);
}

std::optional<Rational> Rational::approximate(double x, double tol, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued fraction convergents
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class p2 = ai * p1 + p0;
        mpz_class q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class cand(p1, q1);
        cand.canonicalize();
        if (std::abs(cand.get_d() - x) <= tol * std::max(1.0, std::abs(x))) return Rational(cand);
        double frac = r - a;
        if (frac == 0.0) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<Rational> Rational::from_complex(std::complex<double> z, double tol) {
    if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z))) return std::nullopt;
    return approximate(z.real(), tol);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = q_.get_num();
    mpz_class d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

// ---------------------------------------------------------------- Gaussian

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_zero()) throw std::domain_error("Gaussian: division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

Gaussian Gaussian::parse(std::string_view text) {
    auto [a, b] = parse_extension(text, 'i');
    return {a, b};
}

std::string Gaussian::str() const {
    return format_extension(re_, im_, 'i');
}

std::optional<Gaussian> Gaussian::from_complex(std::complex<double> z, double tol) {
    auto a = Rational::approximate(z.real(), tol);
    auto b = Rational::approximate(z.imag(), tol);
    if (!a || !b) return std::nullopt;
    return Gaussian(*a, *b);
}

// -------------------------------------------------------------- Eisenstein

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
    Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ - bd;
    Rational b = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) {
    if (o.is_zero()) throw std::domain_error("Eisenstein: division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
}

std::complex<double> Eisenstein::to_complex() const {
    double a = a_.to_double();
    double b = b_.to_double();
    return {a - 0.5 * b, 0.5 * kSqrt3 * b};
}

std::optional<Eisenstein> Eisenstein::from_complex(std::complex<double> z, double tol) {
    double b = 2.0 * z.imag() / kSqrt3;
    double a = z.real() + 0.5 * b;
    auto ra = Rational::approximate(a, tol);
    auto rb = Rational::approximate(b, tol);
    if (!ra || !rb) return std::nullopt;
    return Eisenstein(*ra, *rb);
}

Eisenstein Eisenstein::parse(std::string_view text) {
    auto [a, b] = parse_extension(text, 'w');
    return {a, b};
}

std::string Eisenstein::str() const {
    return format_extension(a_, b_, 'w');
}

// ------------------------------------------------------------ ComplexFloat

ComplexFloat::ComplexFloat(std::complex<double> z, double tol) : z_(z), tol_(tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("ComplexFloat: tolerance must be positive");
}

ComplexFloat& ComplexFloat::operator/=(const ComplexFloat& o) {
    if (o.z_ == std::complex<double>(0.0, 0.0)) throw std::domain_error("ComplexFloat: division by zero");
    z_ /= o.z_;
    tol_ = std::max(tol_, o.tol_);
    return *this;
}

bool operator==(const ComplexFloat& a, const ComplexFloat& b) {
    double tol = std::max(a.tol_, b.tol_);
    double scale = std::max({1.0, std::abs(a.z_), std::abs(b.z_)});
    return std::abs(a.z_ - b.z_) <= tol * scale;
}

ComplexFloat ComplexFloat::parse(std::string_view text, double tol) {
    text = trim(text);
    std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("invalid complex float: '" + std::string(text) + "'");
    std::string re(trim(text.substr(0, comma)));
    std::string im(trim(text.substr(comma + 1)));
    try {
        std::size_t used_re = 0;
        std::size_t used_im = 0;
        double r = std::stod(re, &used_re);
        double i = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument("trailing");
        return {r, i, tol};
    } catch (const std::exception&) {
        throw ParseError("invalid complex float: '" + std::string(text) + "'");
    }
}

std::string ComplexFloat::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z_.real(), z_.imag());
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Gaussian& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const ComplexFloat& x) { return os << x.str(); }

// ------------------------------------------------------------------ Scalar

ScalarKind kind_of(const Scalar& s) {
    return static_cast<ScalarKind>(s.index());
}

Scalar conj(const Scalar& s) {
    return std::visit([](const auto& x) -> Scalar { return x.conj(); }, s);
}

bool scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.index() != b.index()) throw std::invalid_argument("scalar_eq: variant mismatch");
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

std::string to_string(const Scalar& s) {
    return std::visit([](const auto& x) { return x.str(); }, s);
}

Scalar parse_scalar(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty scalar");
    if (text.find(',') != std::string_view::npos) return ComplexFloat::parse(text);
    if (text.back() == 'i') return Gaussian::parse(text);
    if (text.back() == 'w') return Eisenstein::parse(text);
    return Rational::parse(text);
}

}  // namespace cubicdet
