#pragma once

// Explicit-instantiation helper: every field-generic template in the library
// is compiled once per supported field.
#define CUBICDET_FOR_EACH_FIELD(X) \
    X(::cubicdet::Rational)        \
    X(::cubicdet::Gaussian)        \
    X(::cubicdet::Eisenstein)      \
    X(::cubicdet::ComplexFloat)
