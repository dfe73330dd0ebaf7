#pragma once

// Homogeneous polynomials with coefficients in a field K.
//
// Monomials of a given degree are ordered graded-lexicographically with
// z0 > z1 > ... (so z0^3 comes first, the last variable's pure power last).

#include <cstddef>
#include <memory>
#include <vector>

#include "cubicdet/matrix.hpp"
#include "cubicdet/scalars.hpp"

namespace cubicdet {

using Exponents = std::vector<int>;

/// Exponent vectors of all degree-d monomials in n variables, grlex order.
const std::vector<Exponents>& monomials(std::size_t nvars, std::size_t degree);
/// Position of a monomial in monomials(nvars, sum(e)).
std::size_t monomial_index(const Exponents& e);
std::size_t monomial_count(std::size_t nvars, std::size_t degree);

template <FieldType K>
class Form {
  public:
    Form() = default;
    Form(std::size_t nvars, std::size_t degree)
        : nvars_(nvars), degree_(degree), coeffs_(monomial_count(nvars, degree), K(0)) {}
    Form(std::size_t nvars, std::size_t degree, Vec<K> coeffs);

    static Form variable(std::size_t nvars, std::size_t i);
    static Form constant(std::size_t nvars, const K& c);
    /// c0 z0 + c1 z1 + ...
    static Form linear(const Vec<K>& c);
    static Form monomial(const Exponents& e, const K& c = K(1));

    std::size_t nvars() const { return nvars_; }
    std::size_t degree() const { return degree_; }
    const Vec<K>& coeffs() const { return coeffs_; }
    Vec<K>& coeffs() { return coeffs_; }
    const K& coeff(const Exponents& e) const { return coeffs_[monomial_index(e)]; }
    K& coeff(const Exponents& e) { return coeffs_[monomial_index(e)]; }

    bool is_zero() const { return is_zero_vector(coeffs_); }
    K evaluate(const Vec<K>& point) const;
    Form conj() const;
    Form partial(std::size_t var) const;
    /// Substitutes subs[i] for variable i; all subs share nvars and degree.
    Form compose(const std::vector<Form>& subs) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Form operator*(const K& s, Form a) {
        for (auto& c : a.coeffs_) c = s * c;
        return a;
    }
    friend Form operator*(const Form& a, const Form& b) { return multiply(a, b); }
    friend bool operator==(const Form& a, const Form& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    static Form multiply(const Form& a, const Form& b);
    void check_same(const Form& o) const;

    std::size_t nvars_ = 0;
    std::size_t degree_ = 0;
    Vec<K> coeffs_;
};

/// Scalar s with b = s*a, or nullopt when the forms are not proportional
/// (a must be nonzero).
template <FieldType K>
std::optional<K> proportionality(const Form<K>& a, const Form<K>& b);

/// True when a and b are nonzero scalar multiples of each other.
template <FieldType K>
bool projectively_equal(const Form<K>& a, const Form<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto s = proportionality(a, b);
    return s.has_value() && !s->is_zero();
}

/// Expresses target as a linear combination of the given forms; nullopt if
/// it is not in their span.
template <FieldType K>
std::optional<Vec<K>> solve_combination(const std::vector<Form<K>>& forms, const Form<K>& target);

template <FieldType K>
Form<ComplexFloat> to_complex_form(const Form<K>& f, double tol = kDefaultTolerance) {
    Vec<ComplexFloat> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.emplace_back(x.to_complex(), tol);
    return Form<ComplexFloat>(f.nvars(), f.degree(), std::move(c));
}

/// Plain complex evaluation, used in tight numeric loops.
template <FieldType K>
std::complex<double> evaluate_complex(const Form<K>& f, const std::vector<std::complex<double>>& point);

}  // namespace cubicdet
