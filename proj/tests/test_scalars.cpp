#include <doctest.h>

#include "cubicdet/forms.hpp"
#include "cubicdet/projective.hpp"

using namespace cubicdet;

TEST_CASE("Conjugation") {
    CHECK(Rational(3, 2).conj() == Rational(3, 2));
    Eisenstein w = Eisenstein::omega();
    CHECK(w.conj() == Eisenstein(-1) - w);
    CHECK(w.conj() == w * w);
    CHECK(Gaussian(1, 1).conj() == Gaussian(1, -1));
    CHECK(conj(Scalar(Gaussian(2, 3))).index() == 1);
    CHECK(scalar_eq(conj(Scalar(Gaussian(2, 3))), Scalar(Gaussian(2, -3))));
}

TEST_CASE("Equality") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    Eisenstein w = Eisenstein::omega();
    CHECK(w * w * w == Eisenstein(1));
    CHECK(Eisenstein(1) + w + w * w == Eisenstein(0));
    CHECK(ComplexFloat(1.0000000001, 0.0) == ComplexFloat(1.0, 0.0));
    CHECK_FALSE(ComplexFloat(1.00001, 0.0) == ComplexFloat(1.0, 0.0));
    CHECK(ComplexFloat(1e6 + 1e-4, 0.0) == ComplexFloat(1e6, 0.0));
    CHECK_THROWS_AS(scalar_eq(Scalar(Rational(1)), Scalar(Gaussian(1))), std::invalid_argument);
}

TEST_CASE("Textual form") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Gaussian::parse("1/2+3/4*i") == Gaussian(Rational(1, 2), Rational(3, 4)));
    CHECK(Eisenstein::parse("2-1/3*w") == Eisenstein(Rational(2), Rational(-1, 3)));
    for (const auto& e : {Eisenstein(Rational(5, 7), Rational(-2, 3)), Eisenstein(0), Eisenstein::omega()})
        CHECK(Eisenstein::parse(e.str()) == e);
    for (const auto& g : {Gaussian(Rational(-1, 9), Rational(4)), Gaussian(0, -1)}) CHECK(Gaussian::parse(g.str()) == g);
    CHECK(kind_of(parse_scalar("1/2+1*w")) == ScalarKind::EisensteinQ);
    CHECK(kind_of(parse_scalar("1/2")) == ScalarKind::RationalQ);
    CHECK(kind_of(parse_scalar("0.5,-1.25")) == ScalarKind::ComplexFloat);
    CHECK(scalar_eq(parse_scalar(to_string(Scalar(ComplexFloat(0.1, -2.5)))), Scalar(ComplexFloat(0.1, -2.5))));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("Division") {
    Eisenstein x(Rational(3), Rational(-2));
    CHECK(x / x == Eisenstein(1));
    CHECK(x * (Eisenstein(1) / x) == Eisenstein(1));
    Gaussian g(2, 5);
    CHECK(g * (Gaussian(1) / g) == Gaussian(1));
    CHECK_THROWS(Rational(1) / Rational(0));
}
