#include "cubicdet/lineconfig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cubicdet/instantiate.hpp"

namespace cubicdet {

namespace {

std::array<std::size_t, 4> others(std::size_t i, std::size_t j) {
    std::array<std::size_t, 4> out{};
    std::size_t n = 0;
    for (std::size_t k = 0; k < 6; ++k)
        if (k != i && k != j) out[n++] = k;
    return out;
}

bool meets(const Incidence& inc, std::size_t i, std::size_t j) { return inc[i][j]; }

/// True when the label layout's incidence pattern holds.
void check_label_pattern(const Incidence& inc) {
    auto expect = [&](std::size_t x, std::size_t y, bool want) {
        if (inc[x][y] != want)
            throw BadConfiguration("incidence of " + line_label(x) + " and " + line_label(y) + " violates the labeling");
    };
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (i != j) {
                expect(a_index(i), a_index(j), false);
                expect(b_index(i), b_index(j), false);
            }
            expect(a_index(i), b_index(j), i != j);
        }
    }
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            std::size_t c = c_index(i, j);
            for (std::size_t k = 0; k < 6; ++k) {
                bool in = (k == i || k == j);
                expect(c, a_index(k), in);
                expect(c, b_index(k), in);
            }
            for (std::size_t k = 0; k < 6; ++k)
                for (std::size_t l = k + 1; l < 6; ++l) {
                    std::size_t d = c_index(k, l);
                    if (d == c) continue;
                    bool disjoint = k != i && k != j && l != i && l != j;
                    expect(c, d, disjoint);
                }
        }
    }
}

}  // namespace

std::size_t c_index(std::size_t i, std::size_t j) {
    if (i == j || i >= 6 || j >= 6) throw std::invalid_argument("c_index: bad pair");
    if (i > j) std::swap(i, j);
    std::size_t idx = 12;
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = p + 1; q < 6; ++q) {
            if (p == i && q == j) return idx;
            ++idx;
        }
    return idx;
}

std::string line_label(std::size_t index) {
    if (index < 6) return "a" + std::to_string(index + 1);
    if (index < 12) return "b" + std::to_string(index - 5);
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = p + 1; q < 6; ++q)
            if (c_index(p, q) == index) return "c" + std::to_string(p + 1) + std::to_string(q + 1);
    throw std::invalid_argument("line_label: index out of range");
}

template <FieldType K>
Incidence incidence_graph(const std::vector<LineH<K>>& lines) {
    if (lines.size() != kLineCount) throw BadConfiguration("expected 27 lines");
    Incidence inc{};
    for (std::size_t i = 0; i < kLineCount; ++i) {
        for (std::size_t j = i + 1; j < kLineCount; ++j) {
            auto r = lines_meet(lines[i], lines[j]);
            if (std::holds_alternative<EqualLines>(r)) throw BadConfiguration("duplicate lines in configuration");
            bool m = std::holds_alternative<PointP3<K>>(r);
            inc[i][j] = inc[j][i] = m;
        }
    }
    for (std::size_t i = 0; i < kLineCount; ++i) {
        std::size_t deg = 0;
        for (std::size_t j = 0; j < kLineCount; ++j) deg += inc[i][j] ? 1 : 0;
        if (deg != 10) throw BadConfiguration("line " + std::to_string(i) + " meets " + std::to_string(deg) + " lines, expected 10");
    }
    return inc;
}

template <FieldType K>
LineConfiguration<K> labeled_configuration(std::vector<LineH<K>> lines, const Form<K>& surface) {
    LineConfiguration<K> cfg;
    cfg.incidence = incidence_graph(lines);
    check_label_pattern(cfg.incidence);
    cfg.lines = std::move(lines);
    cfg.surface = surface;
    return cfg;
}

std::size_t third_line(const Incidence& inc, std::size_t i, std::size_t j) {
    if (!inc[i][j]) throw BadConfiguration("third_line: lines do not meet");
    for (std::size_t k = 0; k < kLineCount; ++k)
        if (k != i && k != j && inc[i][k] && inc[j][k]) return k;
    throw BadConfiguration("third_line: no tritangent plane through the pair");
}

namespace {

std::array<std::size_t, kLineCount> relabel_order(const Incidence& inc, const std::array<std::size_t, 6>& six) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (six[i] == six[j] || inc[six[i]][six[j]]) throw NotSkew("relabel: lines are not mutually skew");
    std::array<std::size_t, kLineCount> order{};
    for (std::size_t i = 0; i < 6; ++i) order[a_index(i)] = six[i];
    for (std::size_t j = 0; j < 6; ++j) {
        std::size_t found = kLineCount;
        for (std::size_t x = 0; x < kLineCount; ++x) {
            if (std::find(six.begin(), six.end(), x) != six.end()) continue;
            bool ok = !inc[x][six[j]];
            for (std::size_t i = 0; i < 6 && ok; ++i)
                if (i != j && !inc[x][six[i]]) ok = false;
            if (ok) {
                if (found != kLineCount) throw BadConfiguration("relabel: b-line is not unique");
                found = x;
            }
        }
        if (found == kLineCount) throw BadConfiguration("relabel: no line completes the double-six");
        order[b_index(j)] = found;
    }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            std::size_t c = third_line(inc, order[b_index(i)], order[a_index(j)]);
            if (third_line(inc, order[b_index(j)], order[a_index(i)]) != c)
                throw BadConfiguration("relabel: inconsistent c-line");
            order[c_index(i, j)] = c;
        }
    std::set<std::size_t> seen(order.begin(), order.end());
    if (seen.size() != kLineCount) throw BadConfiguration("relabel: labels are not a permutation");
    return order;
}

}  // namespace

template <FieldType K>
Relabeling<K> relabel(const LineConfiguration<K>& cfg, const std::array<std::size_t, 6>& skew_six) {
    auto order = relabel_order(cfg.incidence, skew_six);
    Relabeling<K> out;
    out.old_index = order;
    out.config.surface = cfg.surface;
    for (std::size_t n = 0; n < kLineCount; ++n) out.config.lines.push_back(cfg.lines[order[n]]);
    for (std::size_t n = 0; n < kLineCount; ++n)
        for (std::size_t m = 0; m < kLineCount; ++m) out.config.incidence[n][m] = cfg.incidence[order[n]][order[m]];
    check_label_pattern(out.config.incidence);
    return out;
}

template <FieldType K>
LineConfiguration<K> configuration_from_lines(const std::vector<LineH<K>>& lines, const Form<K>& surface) {
    LineConfiguration<K> raw;
    raw.incidence = incidence_graph(lines);
    raw.lines = lines;
    raw.surface = surface;
    // lexicographically first set of six mutually skew lines
    std::array<std::size_t, 6> six{};
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t depth, std::size_t start) {
        if (depth == 6) return true;
        for (std::size_t x = start; x < kLineCount; ++x) {
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k)
                if (raw.incidence[x][six[k]]) ok = false;
            if (!ok) continue;
            six[depth] = x;
            if (search(depth + 1, x + 1)) return true;
        }
        return false;
    };
    if (!search(0, 0)) throw BadConfiguration("no six mutually skew lines");
    return relabel(raw, six).config;
}

template <FieldType K>
std::vector<TritangentPlane<K>> tritangent_planes(const LineConfiguration<K>& cfg) {
    std::vector<TritangentPlane<K>> out;
    const auto& inc = cfg.incidence;
    for (std::size_t i = 0; i < kLineCount; ++i)
        for (std::size_t j = i + 1; j < kLineCount; ++j) {
            if (!inc[i][j]) continue;
            for (std::size_t k = j + 1; k < kLineCount; ++k) {
                if (!inc[i][k] || !inc[j][k]) continue;
                PlaneH<K> plane = span_plane(cfg.lines[i], cfg.lines[j]);
                if (!cfg.lines[k].lies_on(plane)) throw BadConfiguration("triangle of lines is not coplanar");
                out.push_back({plane, {i, j, k}});
            }
        }
    if (out.size() != 45) throw BadConfiguration("expected 45 tritangent planes, found " + std::to_string(out.size()));
    std::array<int, kLineCount> per_line{};
    for (const auto& t : out)
        for (auto l : t.lines) ++per_line[l];
    for (int c : per_line)
        if (c != 5) throw BadConfiguration("a line does not lie on exactly 5 tritangent planes");
    return out;
}

DoubleSix canonical(const DoubleSix& ds) {
    auto sorted = [](const std::array<std::size_t, 6>& up, const std::array<std::size_t, 6>& lo) {
        std::array<std::pair<std::size_t, std::size_t>, 6> cols;
        for (std::size_t k = 0; k < 6; ++k) cols[k] = {up[k], lo[k]};
        std::sort(cols.begin(), cols.end());
        DoubleSix out{};
        for (std::size_t k = 0; k < 6; ++k) {
            out.upper[k] = cols[k].first;
            out.lower[k] = cols[k].second;
        }
        return out;
    };
    DoubleSix x = sorted(ds.upper, ds.lower);
    DoubleSix y = sorted(ds.lower, ds.upper);
    return std::min(x, y);
}

bool is_double_six(const Incidence& inc, const DoubleSix& ds) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (i != j && (meets(inc, ds.upper[i], ds.upper[j]) || meets(inc, ds.lower[i], ds.lower[j]))) return false;
            if (meets(inc, ds.upper[i], ds.lower[j]) != (i != j)) return false;
        }
    return true;
}

template <FieldType K>
std::vector<DoubleSix> double_sixes(const LineConfiguration<K>& cfg) {
    std::vector<DoubleSix> out;
    DoubleSix ab{};
    for (std::size_t i = 0; i < 6; ++i) {
        ab.upper[i] = a_index(i);
        ab.lower[i] = b_index(i);
    }
    out.push_back(ab);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            DoubleSix ds{};
            ds.upper[0] = a_index(i);
            ds.upper[1] = b_index(i);
            ds.lower[0] = a_index(j);
            ds.lower[1] = b_index(j);
            auto rest = others(i, j);
            for (std::size_t n = 0; n < 4; ++n) {
                ds.upper[2 + n] = c_index(j, rest[n]);
                ds.lower[2 + n] = c_index(i, rest[n]);
            }
            out.push_back(ds);
        }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k) {
                std::array<std::size_t, 3> rest{};
                std::size_t n = 0;
                for (std::size_t x = 0; x < 6; ++x)
                    if (x != i && x != j && x != k) rest[n++] = x;
                auto [l, m, q] = rest;
                DoubleSix ds{{a_index(i), a_index(j), a_index(k), c_index(m, q), c_index(l, q), c_index(l, m)},
                             {c_index(j, k), c_index(i, k), c_index(i, j), b_index(l), b_index(m), b_index(q)}};
                out.push_back(ds);
            }
    for (auto& ds : out) {
        if (!is_double_six(cfg.incidence, ds)) throw BadConfiguration("catalog double-six fails the incidence test");
        ds = canonical(ds);
    }
    std::set<DoubleSix> unique(out.begin(), out.end());
    if (unique.size() != 36) throw BadConfiguration("double-six catalog is not 36 distinct entries");
    return out;
}

template <FieldType K>
DoubleSix complete_half(const LineConfiguration<K>& cfg, const std::array<std::size_t, 6>& six) {
    const auto all = double_sixes(cfg);
    bool skew = true;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (six[i] == six[j] || cfg.incidence[six[i]][six[j]]) skew = false;
    auto column_of = [](const std::array<std::size_t, 6>& row, std::size_t line) -> std::size_t {
        for (std::size_t k = 0; k < 6; ++k)
            if (row[k] == line) return k;
        return 6;
    };
    std::vector<DoubleSix> found;
    for (const auto& base : all) {
        for (const DoubleSix& ds : {base, base.swapped()}) {
            std::array<std::size_t, 6> perm{};
            std::vector<bool> used(6, false);
            bool ok = true;
            std::size_t fixed = skew ? 6 : 3;
            for (std::size_t k = 0; k < fixed && ok; ++k) {
                std::size_t c = column_of(ds.upper, six[k]);
                if (c == 6) ok = false;
                else {
                    perm[k] = c;
                    used[c] = true;
                }
            }
            if (!ok) continue;
            if (!skew) {
                std::set<std::size_t> cols(perm.begin(), perm.begin() + 3);
                std::set<std::size_t> lower_cols;
                for (std::size_t k = 3; k < 6; ++k) lower_cols.insert(column_of(ds.lower, six[k]));
                if (cols != lower_cols) continue;
                std::size_t n = 3;
                for (std::size_t c = 0; c < 6; ++c)
                    if (!used[c]) perm[n++] = c;
            }
            DoubleSix out{};
            for (std::size_t k = 0; k < 6; ++k) {
                out.upper[k] = ds.upper[perm[k]];
                out.lower[k] = ds.lower[perm[k]];
            }
            found.push_back(out);
        }
    }
    if (found.size() != 1) throw NotAHalf("complete_half: the six lines are not half of a unique double-six");
    return found.front();
}

template <FieldType K>
std::vector<SteinerSet<K>> steiner_sets(const LineConfiguration<K>& cfg) {
    auto planes = tritangent_planes(cfg);
    std::map<std::array<std::size_t, 3>, std::size_t> plane_of;
    for (std::size_t p = 0; p < planes.size(); ++p) {
        auto key = planes[p].lines;
        std::sort(key.begin(), key.end());
        plane_of[key] = p;
    }
    auto lookup = [&](std::size_t x, std::size_t y, std::size_t z) -> std::size_t {
        std::array<std::size_t, 3> key{x, y, z};
        std::sort(key.begin(), key.end());
        auto it = plane_of.find(key);
        return it == plane_of.end() ? planes.size() : it->second;
    };
    auto disjoint = [&](std::size_t p, std::size_t q) {
        for (auto x : planes[p].lines)
            for (auto y : planes[q].lines)
                if (x == y) return false;
        return true;
    };
    std::set<std::pair<std::array<std::size_t, 3>, std::array<std::size_t, 3>>> seen;
    std::vector<SteinerSet<K>> out;
    std::array<std::size_t, 3> id{0, 1, 2};
    for (std::size_t p = 0; p < planes.size(); ++p)
        for (std::size_t q = p + 1; q < planes.size(); ++q) {
            if (!disjoint(p, q)) continue;
            for (std::size_t r = q + 1; r < planes.size(); ++r) {
                if (!disjoint(p, r) || !disjoint(q, r)) continue;
                const auto& rp = planes[p].lines;
                const auto& rq = planes[q].lines;
                const auto& rr = planes[r].lines;
                std::array<std::size_t, 3> sigma = id;
                do {
                    std::array<std::size_t, 3> tau = id;
                    do {
                        std::array<std::size_t, 3> cols{};
                        bool ok = true;
                        for (std::size_t k = 0; k < 3 && ok; ++k) {
                            cols[k] = lookup(rp[k], rq[sigma[k]], rr[tau[k]]);
                            if (cols[k] == planes.size()) ok = false;
                        }
                        if (!ok) continue;
                        std::array<std::size_t, 3> rows_key{p, q, r};
                        std::array<std::size_t, 3> cols_key = cols;
                        std::sort(cols_key.begin(), cols_key.end());
                        auto key = std::min(std::make_pair(rows_key, cols_key), std::make_pair(cols_key, rows_key));
                        if (!seen.insert(key).second) continue;
                        SteinerSet<K> st;
                        for (std::size_t k = 0; k < 3; ++k) st.grid[0][k] = rp[k];
                        for (std::size_t k = 0; k < 3; ++k) st.grid[1][k] = rq[sigma[k]];
                        for (std::size_t k = 0; k < 3; ++k) st.grid[2][k] = rr[tau[k]];
                        st.rows = {planes[p].plane, planes[q].plane, planes[r].plane};
                        for (std::size_t k = 0; k < 3; ++k) st.columns[k] = planes[cols[k]].plane;
                        auto prod = [](const std::array<PlaneH<K>, 3>& f) {
                            return Form<K>::linear(f[0]) * Form<K>::linear(f[1]) * Form<K>::linear(f[2]);
                        };
                        auto sol = solve_combination<K>({prod(st.rows), prod(st.columns)}, cfg.surface);
                        if (!sol) throw BadConfiguration("Steiner set does not satisfy the trihedral identity");
                        st.s = (*sol)[0];
                        st.t = (*sol)[1];
                        out.push_back(std::move(st));
                    } while (std::next_permutation(tau.begin(), tau.end()));
                } while (std::next_permutation(sigma.begin(), sigma.end()));
            }
        }
    if (out.size() != 120) throw BadConfiguration("expected 120 Steiner sets, found " + std::to_string(out.size()));
    return out;
}

template <FieldType K>
std::size_t find_line(const LineConfiguration<K>& cfg, const LineH<K>& l) {
    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
        if (cfg.lines[i] == l) return i;
    return static_cast<std::size_t>(-1);
}

#define CUBICDET_INSTANTIATE_LINECONFIG(K)                                                           \
    template Incidence incidence_graph(const std::vector<LineH<K>>&);                                \
    template LineConfiguration<K> labeled_configuration(std::vector<LineH<K>>, const Form<K>&);      \
    template LineConfiguration<K> configuration_from_lines(const std::vector<LineH<K>>&, const Form<K>&); \
    template std::vector<TritangentPlane<K>> tritangent_planes(const LineConfiguration<K>&);         \
    template std::vector<DoubleSix> double_sixes(const LineConfiguration<K>&);                       \
    template DoubleSix complete_half(const LineConfiguration<K>&, const std::array<std::size_t, 6>&); \
    template std::vector<SteinerSet<K>> steiner_sets(const LineConfiguration<K>&);                   \
    template Relabeling<K> relabel(const LineConfiguration<K>&, const std::array<std::size_t, 6>&);  \
    template std::size_t find_line(const LineConfiguration<K>&, const LineH<K>&);
CUBICDET_FOR_EACH_FIELD(CUBICDET_INSTANTIATE_LINECONFIG)

}  // namespace cubicdet
