#include "cubicdet/surface.hpp"

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

namespace {

template <FieldType K>
Matrix<K> evaluation_matrix(const std::vector<Vec<K>>& points, std::size_t degree) {
    const std::size_t n = points.front().size();
    const auto& mons = monomials(n, degree);
    Matrix<K> m(points.size(), mons.size());
    for (std::size_t r = 0; r < points.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = Form<K>::monomial(mons[c]).evaluate(points[r]);
    return m;
}

template <FieldType K>
K det3(const PointP2<K>& a, const PointP2<K>& b, const PointP2<K>& c) {
    return determinant(Matrix<K>::from_rows({a, b, c}));
}

/// Small integer sample points (1, s, t) of the plane, in a fixed order.
template <FieldType K>
std::vector<PointP2<K>> plane_samples(std::size_t count) {
    std::vector<PointP2<K>> out;
    for (long r = 1; out.size() < count; ++r)
        for (long s = -r; s <= r && out.size() < count; ++s)
            for (long t = -r; t <= r && out.size() < count; ++t) {
                if (std::max(std::abs(s), std::abs(t)) != r && r > 1) continue;
                out.push_back({K(1), K(s), K(t)});
            }
    return out;
}

}  // namespace

template <FieldType K>
std::vector<Form<K>> cubic_system_through(const std::array<PointP2<K>, 6>& points) {
    for (const auto& p : points)
        if (p.size() != 3 || is_zero_vector(p)) throw DegeneratePoints("invalid plane point");
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (projectively_equal(points[i], points[j]))
                throw DegeneratePoints("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
            for (std::size_t k = j + 1; k < 6; ++k)
                if (det3(points[i], points[j], points[k]).is_zero())
                    throw DegeneratePoints("points " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                                           std::to_string(k + 1) + " are collinear");
        }
    std::vector<Vec<K>> pts(points.begin(), points.end());
    if (determinant(evaluation_matrix(pts, 2)).is_zero()) throw DegeneratePoints("the six points lie on a conic");
    auto ker = nullspace(evaluation_matrix(pts, 3));
    if (ker.size() != 4) throw DegeneratePoints("interpolation matrix does not have rank 6");
    std::vector<Form<K>> out;
    for (auto& v : ker) out.emplace_back(3, 3, std::move(v));
    return out;
}

template <FieldType K>
Matrix<K> HilbertBurchL<K>::at(const PointP2<K>& x) const {
    Matrix<K> out(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = dot(entries[i][j], x);
    return out;
}

template <FieldType K>
std::array<Form<K>, 4> HilbertBurchL<K>::signed_minors() const {
    auto e = [&](std::size_t i, std::size_t j) { return Form<K>::linear(entries[i][j]); };
    std::array<Form<K>, 4> out;
    for (std::size_t j = 0; j < 4; ++j) {
        std::array<std::size_t, 3> c{};
        std::size_t n = 0;
        for (std::size_t k = 0; k < 4; ++k)
            if (k != j) c[n++] = k;
        Form<K> d = e(0, c[0]) * (e(1, c[1]) * e(2, c[2]) - e(1, c[2]) * e(2, c[1])) -
                    e(0, c[1]) * (e(1, c[0]) * e(2, c[2]) - e(1, c[2]) * e(2, c[0])) +
                    e(0, c[2]) * (e(1, c[0]) * e(2, c[1]) - e(1, c[1]) * e(2, c[0]));
        out[j] = (j % 2 == 0) ? d : -d;
    }
    return out;
}

template <FieldType K>
HilbertBurchL<K> hilbert_burch(const std::vector<Form<K>>& cubics) {
    if (cubics.size() != 4) throw ResolutionFailure("hilbert_burch: need four cubics");
    // unknowns u[j][k]: linear syzygy sum_j (sum_k u_jk x_k) F_j = 0
    const std::size_t rows = monomial_count(3, 4);
    Matrix<K> sys(rows, 12);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            Form<K> prod = Form<K>::variable(3, k) * cubics[j];
            for (std::size_t r = 0; r < rows; ++r) sys(r, 3 * j + k) = prod.coeffs()[r];
        }
    auto ker = nullspace(sys);
    if (ker.size() != 3)
        throw ResolutionFailure("hilbert_burch: expected 3 linear syzygies, found " + std::to_string(ker.size()));
    if constexpr (K::exact) {
        // canonical basis of the syzygy space
        auto e = rref(Matrix<K>::from_rows(ker));
        for (std::size_t i = 0; i < 3; ++i) ker[i] = e.reduced.row(i);
    }
    HilbertBurchL<K> l;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) l.entries[i][j] = Vec<K>(ker[i].begin() + 3 * j, ker[i].begin() + 3 * j + 3);
    auto minors = l.signed_minors();
    std::optional<K> factor;
    for (std::size_t j = 0; j < 4; ++j) {
        if (cubics[j].is_zero()) throw ResolutionFailure("hilbert_burch: zero cubic in basis");
        auto s = proportionality(cubics[j], minors[j]);
        if (!s || s->is_zero()) throw ResolutionFailure("hilbert_burch: minors are not proportional to the basis");
        if (factor && !(*factor == *s)) throw ResolutionFailure("hilbert_burch: minors differ by distinct factors");
        if (!factor) factor = *s;
    }
    l.minor_factor = *factor;
    return l;
}

template <FieldType K>
LinearPencil<K> pencil_from_L(const HilbertBurchL<K>& l) {
    std::array<Matrix<K>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) {
        c[j] = Matrix<K>(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) c[j](i, k) = l.entries[i][j][k];
    }
    return LinearPencil<K>(c);
}

template <FieldType K>
HilbertBurchL<K> L_from_pencil(const LinearPencil<K>& m) {
    HilbertBurchL<K> l;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            l.entries[i][j] = Vec<K>(3);
            for (std::size_t k = 0; k < 3; ++k) l.entries[i][j][k] = m.coeff(j)(i, k);
        }
    l.minor_factor = K(1);
    return l;
}

template <FieldType K>
PointP3<K> BlowupSurface<K>::image(const PointP2<K>& x) const {
    PointP3<K> out;
    for (const auto& f : cubics) out.push_back(f.evaluate(x));
    return out;
}

template <FieldType K>
Form<K> normalize_form(const Form<K>& f) {
    Vec<K> c = normalize_projective(f.coeffs());
    return Form<K>(f.nvars(), f.degree(), std::move(c));
}

template <FieldType K>
std::optional<Form<K>> implicit_cubic(const std::vector<PointP3<K>>& points) {
    auto ker = nullspace(evaluation_matrix(points, 3));
    if (ker.size() != 1) return std::nullopt;
    return normalize_form(Form<K>(4, 3, ker.front()));
}

namespace {

template <FieldType K>
void finish_surface(BlowupSurface<K>& s) {
    std::vector<PointP3<K>> images;
    for (const auto& x : plane_samples<K>(60)) {
        auto img = s.image(x);
        if (!is_zero_vector(img)) images.push_back(img);
    }
    auto f = implicit_cubic(images);
    if (!f) throw DegenerateSurface("image of the cubic map is not a cubic surface");
    s.F = *f;
    auto c = proportionality(s.F, det_pencil(s.M));
    if (!c || c->is_zero()) throw DegenerateSurface("det M is not a multiple of the implicit equation");
    s.c = *c;
}

}  // namespace

template <FieldType K>
BlowupSurface<K> make_blowup(const std::array<PointP2<K>, 6>& points, const std::optional<std::vector<Form<K>>>& basis) {
    BlowupSurface<K> s;
    s.points = points;
    auto system = cubic_system_through(points);
    if (basis) {
        if (basis->size() != 4) throw DegeneratePoints("basis must have four cubics");
        for (const auto& f : *basis) {
            for (const auto& p : points)
                if (!f.evaluate(p).is_zero()) throw DegeneratePoints("basis cubic does not vanish at a base point");
            if (!solve_combination(system, f)) throw DegeneratePoints("basis cubic is not in the linear system");
        }
        Matrix<K> coeffs = Matrix<K>::from_rows({(*basis)[0].coeffs(), (*basis)[1].coeffs(), (*basis)[2].coeffs(),
                                                 (*basis)[3].coeffs()});
        if (rank(coeffs) != 4) throw DegeneratePoints("basis cubics are dependent");
        s.cubics = *basis;
    } else {
        s.cubics = system;
    }
    s.L = hilbert_burch(s.cubics);
    s.M = pencil_from_L(s.L);
    finish_surface(s);
    return s;
}

template <FieldType K>
BlowupSurface<K> make_blowup_from_L(const std::array<PointP2<K>, 6>& points, const HilbertBurchL<K>& l) {
    auto minors = l.signed_minors();
    std::vector<Form<K>> basis(minors.begin(), minors.end());
    BlowupSurface<K> s = make_blowup(points, std::optional<std::vector<Form<K>>>(basis));
    s.L = l;
    s.L.minor_factor = K(1);
    s.M = pencil_from_L(s.L);
    finish_surface(s);
    return s;
}

namespace {

template <FieldType K>
LineH<K> image_line(const BlowupSurface<K>& s, const std::vector<PointP2<K>>& curve_points, const std::string& what) {
    std::vector<PointP3<K>> imgs;
    for (const auto& x : curve_points) {
        auto p = s.image(x);
        if (!is_zero_vector(p)) imgs.push_back(p);
    }
    if (imgs.size() < 3) throw DegenerateSurface(what + ": too few image points");
    std::size_t second = 1;
    while (second < imgs.size() && projectively_equal(imgs[0], imgs[second])) ++second;
    if (second == imgs.size()) throw DegenerateSurface(what + ": image collapses to a point");
    auto line = LineH<K>::through_points(imgs[0], imgs[second]);
    for (const auto& p : imgs)
        if (!line.contains(p)) throw DegenerateSurface(what + ": image is not a line");
    return line;
}

template <FieldType K>
void certify_on_surface(const LineH<K>& l, const Form<K>& f, const std::string& what) {
    auto [p, q] = l.points();
    for (long t = 0; t < 5; ++t) {
        Vec<K> x(4);
        for (std::size_t i = 0; i < 4; ++i) x[i] = p[i] + K(t) * q[i];
        if (t == 4) x = q;
        if (!f.evaluate(x).is_zero()) throw DegenerateSurface(what + " does not lie on the surface");
    }
}

}  // namespace

template <FieldType K>
LineConfiguration<K> twenty_seven_lines(const BlowupSurface<K>& s) {
    std::vector<LineH<K>> lines(kLineCount);
    for (std::size_t i = 0; i < 6; ++i) lines[a_index(i)] = LineH<K>::from_form_matrix(s.L.at(s.points[i]));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            std::vector<PointP2<K>> pts;
            for (long t : {1L, 2L, -1L, 3L}) {
                PointP2<K> x(3);
                for (std::size_t k = 0; k < 3; ++k) x[k] = s.points[i][k] + K(t) * s.points[j][k];
                pts.push_back(x);
            }
            lines[c_index(i, j)] = image_line(s, pts, line_label(c_index(i, j)));
        }
    const std::vector<PointP2<K>> directions = {
        {K(1), K(0), K(0)},  {K(0), K(1), K(0)}, {K(0), K(0), K(1)}, {K(1), K(1), K(0)},  {K(1), K(0), K(1)},
        {K(0), K(1), K(1)},  {K(1), K(1), K(1)}, {K(1), K(2), K(3)}, {K(1), K(-1), K(2)}, {K(2), K(1), K(-1)},
        {K(3), K(-2), K(1)}, {K(1), K(3), K(-2)}};
    for (std::size_t j = 0; j < 6; ++j) {
        std::vector<Vec<K>> five;
        for (std::size_t k = 0; k < 6; ++k)
            if (k != j) five.push_back(s.points[k]);
        auto ker = nullspace(evaluation_matrix(five, 2));
        if (ker.size() != 1) throw DegenerateSurface("conic through five points is not unique");
        Form<K> conic(3, 2, ker.front());
        const auto& p = five.front();
        std::vector<PointP2<K>> pts;
        for (const auto& q : directions) {
            // second intersection of the line p + s q with the conic
            K cq = conic.evaluate(q);
            K b(0);
            for (std::size_t v = 0; v < 3; ++v) b += conic.partial(v).evaluate(p) * q[v];
            // b = 2 B(p, q)
            PointP2<K> x(3);
            for (std::size_t v = 0; v < 3; ++v) x[v] = cq * p[v] - b * q[v];
            if (is_zero_vector(x)) continue;
            bool base = false;
            for (const auto& bp : s.points)
                if (projectively_equal(x, bp)) base = true;
            if (!base) pts.push_back(x);
            if (pts.size() == 5) break;
        }
        lines[b_index(j)] = image_line(s, pts, line_label(b_index(j)));
    }
    for (std::size_t n = 0; n < kLineCount; ++n) certify_on_surface(lines[n], s.F, line_label(n));
    return labeled_configuration(std::move(lines), s.F);
}

template <FieldType K>
SmoothnessResult smoothness_detail(const Form<K>& f) {
    if (f.nvars() != 4 || f.degree() != 3) throw std::invalid_argument("smoothness_check: expects a cubic in 4 variables");
    const auto& cubic_mons = monomials(4, 3);
    Matrix<K> mac(4 * cubic_mons.size(), monomial_count(4, 5));
    for (std::size_t v = 0; v < 4; ++v) {
        Form<K> d = f.partial(v);
        for (std::size_t m = 0; m < cubic_mons.size(); ++m) {
            Form<K> row = d * Form<K>::monomial(cubic_mons[m]);
            for (std::size_t c = 0; c < row.coeffs().size(); ++c) mac(v * cubic_mons.size() + m, c) = row.coeffs()[c];
        }
    }
    SmoothnessResult out;
    out.rank = rank(mac);
    out.smooth = out.rank == mac.cols();
    if constexpr (!K::exact) {
        auto sv = singular_values(mac);
        out.confidence = sv.front() > 0.0 ? sv.back() / sv.front() : 0.0;
    }
    return out;
}

#define CUBICDET_INSTANTIATE_SURFACE(K)                                                                   \
    template std::vector<Form<K>> cubic_system_through(const std::array<PointP2<K>, 6>&);                 \
    template struct HilbertBurchL<K>;                                                                     \
    template HilbertBurchL<K> hilbert_burch(const std::vector<Form<K>>&);                                 \
    template LinearPencil<K> pencil_from_L(const HilbertBurchL<K>&);                                      \
    template HilbertBurchL<K> L_from_pencil(const LinearPencil<K>&);                                      \
    template struct BlowupSurface<K>;                                                                     \
    template BlowupSurface<K> make_blowup(const std::array<PointP2<K>, 6>&, const std::optional<std::vector<Form<K>>>&); \
    template BlowupSurface<K> make_blowup_from_L(const std::array<PointP2<K>, 6>&, const HilbertBurchL<K>&); \
    template LineConfiguration<K> twenty_seven_lines(const BlowupSurface<K>&);                            \
    template SmoothnessResult smoothness_detail(const Form<K>&);                                          \
    template Form<K> normalize_form(const Form<K>&);                                                      \
    template std::optional<Form<K>> implicit_cubic(const std::vector<PointP3<K>>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_SURFACE)

}  // namespace cubicdet
