#include "cubicdet/forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

namespace {

struct MonomialTable {
    std::vector<Exponents> list;
    std::map<Exponents, std::size_t> index;
};

void generate(std::size_t nvars, int remaining, Exponents& cur, std::size_t pos, std::vector<Exponents>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        generate(nvars, remaining - e, cur, pos + 1, out);
    }
}

const MonomialTable& table(std::size_t nvars, std::size_t degree) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<MonomialTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, degree}];
    if (!slot) {
        slot = std::make_unique<MonomialTable>();
        if (nvars > 0) {
            Exponents cur(nvars, 0);
            generate(nvars, static_cast<int>(degree), cur, 0, slot->list);
        }
        for (std::size_t k = 0; k < slot->list.size(); ++k) slot->index[slot->list[k]] = k;
    }
    return *slot;
}

}  // namespace

const std::vector<Exponents>& monomials(std::size_t nvars, std::size_t degree) {
    return table(nvars, degree).list;
}

std::size_t monomial_index(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    const auto& t = table(e.size(), static_cast<std::size_t>(d));
    auto it = t.index.find(e);
    if (it == t.index.end()) throw std::invalid_argument("monomial_index: bad exponent vector");
    return it->second;
}

std::size_t monomial_count(std::size_t nvars, std::size_t degree) {
    return monomials(nvars, degree).size();
}

template <FieldType K>
Form<K>::Form(std::size_t nvars, std::size_t degree, Vec<K> coeffs)
    : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != monomial_count(nvars, degree)) throw std::invalid_argument("Form: wrong coefficient count");
}

template <FieldType K>
Form<K> Form<K>::variable(std::size_t nvars, std::size_t i) {
    Form f(nvars, 1);
    f.coeffs_[i] = K(1);
    return f;
}

template <FieldType K>
Form<K> Form<K>::constant(std::size_t nvars, const K& c) {
    Form f(nvars, 0);
    f.coeffs_[0] = c;
    return f;
}

template <FieldType K>
Form<K> Form<K>::linear(const Vec<K>& c) {
    return Form(c.size(), 1, c);
}

template <FieldType K>
Form<K> Form<K>::monomial(const Exponents& e, const K& c) {
    int d = 0;
    for (int x : e) d += x;
    Form f(e.size(), static_cast<std::size_t>(d));
    f.coeff(e) = c;
    return f;
}

template <FieldType K>
K Form<K>::evaluate(const Vec<K>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Form::evaluate: wrong point size");
    const auto& mons = monomials(nvars_, degree_);
    // powers[v][e] = point[v]^e
    std::vector<std::vector<K>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
        powers[v].push_back(K(1));
        for (std::size_t e = 1; e <= degree_; ++e) powers[v].push_back(powers[v].back() * point[v]);
    }
    K sum(0);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        K term = coeffs_[k];
        for (std::size_t v = 0; v < nvars_; ++v)
            if (mons[k][v] > 0) term *= powers[v][static_cast<std::size_t>(mons[k][v])];
        sum += term;
    }
    return sum;
}

template <FieldType K>
Form<K> Form<K>::conj() const {
    Form f(*this);
    for (auto& c : f.coeffs_) c = c.conj();
    return f;
}

template <FieldType K>
Form<K> Form<K>::partial(std::size_t var) const {
    if (degree_ == 0) return Form(nvars_, 0);
    Form out(nvars_, degree_ - 1);
    const auto& mons = monomials(nvars_, degree_);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (mons[k][var] == 0 || coeffs_[k].is_zero()) continue;
        Exponents e = mons[k];
        K factor(static_cast<long>(e[var]));
        e[var] -= 1;
        out.coeff(e) += factor * coeffs_[k];
    }
    return out;
}

template <FieldType K>
Form<K> Form<K>::compose(const std::vector<Form>& subs) const {
    if (subs.size() != nvars_) throw std::invalid_argument("Form::compose: wrong substitution count");
    const std::size_t n = subs.front().nvars();
    const std::size_t d = subs.front().degree();
    for (const auto& s : subs)
        if (s.nvars() != n || s.degree() != d) throw std::invalid_argument("Form::compose: inconsistent substitutions");
    std::vector<std::vector<Form>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
        powers[v].push_back(Form::constant(n, K(1)));
        for (std::size_t e = 1; e <= degree_; ++e) powers[v].push_back(powers[v].back() * subs[v]);
    }
    Form out(n, degree_ * d);
    const auto& mons = monomials(nvars_, degree_);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        Form term = Form::constant(n, coeffs_[k]);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (mons[k][v] > 0) term = term * powers[v][static_cast<std::size_t>(mons[k][v])];
        out += term;
    }
    return out;
}

template <FieldType K>
void Form<K>::check_same(const Form& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) throw std::invalid_argument("Form: shape mismatch");
}

template <FieldType K>
Form<K>& Form<K>::operator+=(const Form& o) {
    check_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

template <FieldType K>
Form<K>& Form<K>::operator-=(const Form& o) {
    check_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

template <FieldType K>
Form<K> Form<K>::multiply(const Form& a, const Form& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Form: variable count mismatch");
    Form out(a.nvars_, a.degree_ + b.degree_);
    const auto& ma = monomials(a.nvars_, a.degree_);
    const auto& mb = monomials(b.nvars_, b.degree_);
    Exponents e(a.nvars_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            for (std::size_t v = 0; v < a.nvars_; ++v) e[v] = ma[i][v] + mb[j][v];
            out.coeffs_[monomial_index(e)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

template <FieldType K>
std::string Form<K>::str() const {
    std::ostringstream os;
    const auto& mons = monomials(nvars_, degree_);
    bool first = true;
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (mons[k][v] == 0) continue;
            os << "*z" << v;
            if (mons[k][v] > 1) os << "^" << mons[k][v];
        }
    }
    if (first) os << "0";
    return os.str();
}

template <FieldType K>
std::optional<K> proportionality(const Form<K>& a, const Form<K>& b) {
    if (a.nvars() != b.nvars() || a.degree() != b.degree()) return std::nullopt;
    // pick the largest coefficient of a as pivot for numerical stability
    std::size_t piv = a.coeffs().size();
    double best = -1.0;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        if (a.coeffs()[k].is_zero()) continue;
        double m = a.coeffs()[k].magnitude();
        if (m > best) {
            best = m;
            piv = k;
        }
        if constexpr (K::exact) break;
    }
    if (piv == a.coeffs().size()) return std::nullopt;
    K s = b.coeffs()[piv] / a.coeffs()[piv];
    if (!(s * a == b)) return std::nullopt;
    return s;
}

template <FieldType K>
std::optional<Vec<K>> solve_combination(const std::vector<Form<K>>& forms, const Form<K>& target) {
    Matrix<K> a(target.coeffs().size(), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if (forms[j].coeffs().size() != target.coeffs().size())
            throw std::invalid_argument("solve_combination: shape mismatch");
        for (std::size_t i = 0; i < target.coeffs().size(); ++i) a(i, j) = forms[j].coeffs()[i];
    }
    return solve(a, target.coeffs());
}

template <FieldType K>
std::complex<double> evaluate_complex(const Form<K>& f, const std::vector<std::complex<double>>& point) {
    const auto& mons = monomials(f.nvars(), f.degree());
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < mons.size(); ++k) {
        std::complex<double> term = f.coeffs()[k].to_complex();
        if (term == 0.0) continue;
        for (std::size_t v = 0; v < f.nvars(); ++v)
            for (int e = 0; e < mons[k][v]; ++e) term *= point[v];
        sum += term;
    }
    return sum;
}

#define CUBICDET_INSTANTIATE_FORMS(K)                                                     \
    template class Form<K>;                                                               \
    template std::optional<K> proportionality(const Form<K>&, const Form<K>&);            \
    template std::optional<Vec<K>> solve_combination(const std::vector<Form<K>>&, const Form<K>&); \
    template std::complex<double> evaluate_complex(const Form<K>&, const std::vector<std::complex<double>>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_FORMS)

}  // namespace cubicdet
