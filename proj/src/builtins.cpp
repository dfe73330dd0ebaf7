#include "cubicdet/builtins.hpp"

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

std::array<PointP2<Eisenstein>, 6> fermat_points() {
    const Eisenstein w = Eisenstein::omega();
    const Eisenstein w2 = w * w;
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, w, w2}, {1, w2, w}}};
}

HilbertBurchL<Eisenstein> fermat_L() {
    const Eisenstein w = Eisenstein::omega();
    auto x = [](Eisenstein c0, Eisenstein c1, Eisenstein c2) { return Vec<Eisenstein>{c0, c1, c2}; };
    HilbertBurchL<Eisenstein> l;
    l.entries[0] = {x(0, 1, 0), x(0, 1, 0), x(0, 0, 1), x(0, 0, 1)};
    l.entries[1] = {x(0, 0, 1), x(0, 0, w), x(w, 0, 0), x(1, 0, 0)};
    l.entries[2] = {x(w, 0, 0), x(1, 0, 0), x(0, 1, 0), x(0, w, 0)};
    l.minor_factor = Eisenstein(1);
    return l;
}

BlowupSurface<Eisenstein> fermat_blowup() { return make_blowup_from_L(fermat_points(), fermat_L()); }

template <FieldType K>
Form<K> fermat_form() {
    Form<K> f(4, 3);
    for (std::size_t i = 0; i < 4; ++i) {
        Form<K> z = Form<K>::variable(4, i);
        f += z * z * z;
    }
    return f;
}

template <FieldType K>
Form<K> clebsch_form() {
    Form<K> f(4, 3);
    Form<K> s(4, 1);
    for (std::size_t i = 0; i < 4; ++i) {
        Form<K> z = Form<K>::variable(4, i);
        f += z * z * z;
        s += z;
    }
    return f - s * s * s;
}

template <FieldType K>
Form<K> f5_form() {
    auto z = [](std::size_t i) { return Form<K>::variable(4, i); };
    auto c = [](long n, long d) {
        if constexpr (K::exact)
            return K(Rational(n, d));
        else
            return K(static_cast<double>(n) / static_cast<double>(d), 0.0);
    };
    Form<K> q = c(25, 6) * (z(0) * z(0)) + z(1) * z(1);
    return q * (z(0) + z(2)) - z(3) * (z(3) - c(1, 2) * z(2)) * (z(3) - c(2, 3) * z(2));
}

bool is_builtin(const std::string& name) { return name == "fermat" || name == "f5paper" || name == "clebsch"; }

#define CUBICDET_INSTANTIATE_BUILTINS(K) \
    template Form<K> fermat_form<K>();   \
    template Form<K> clebsch_form<K>();  \
    template Form<K> f5_form<K>();
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_BUILTINS)

}  // namespace cubicdet
