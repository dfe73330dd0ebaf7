#pragma once

// The labeled configuration of 27 lines on a smooth cubic surface.
//
// Label layout (0-based indices into LineConfiguration::lines):
//   0..5    a1..a6
//   6..11   b1..b6
//   12..26  c_ij for i < j in lexicographic order (c12, c13, ..., c56)
// a_i meets b_j iff i != j; c_ij meets a_i, a_j, b_i, b_j and every c_kl with
// {i,j} and {k,l} disjoint.

#include <array>
#include <string>
#include <vector>

#include "cubicdet/forms.hpp"
#include "cubicdet/projective.hpp"

namespace cubicdet {

inline constexpr std::size_t kLineCount = 27;

class BadConfiguration : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class NotAHalf : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class NotSkew : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Incidence = std::array<std::array<bool, kLineCount>, kLineCount>;

constexpr std::size_t a_index(std::size_t i) { return i; }
constexpr std::size_t b_index(std::size_t i) { return 6 + i; }
/// c_ij with i != j (0-based, any order).
std::size_t c_index(std::size_t i, std::size_t j);
std::string line_label(std::size_t index);

template <FieldType K>
struct LineConfiguration {
    std::vector<LineH<K>> lines;
    Incidence incidence{};
    Form<K> surface;
};

/// Pairwise meet test; every line must meet exactly 10 others.
template <FieldType K>
Incidence incidence_graph(const std::vector<LineH<K>>& lines);

/// Builds a configuration from lines already in label order and checks the
/// a/b/c incidence pattern.
template <FieldType K>
LineConfiguration<K> labeled_configuration(std::vector<LineH<K>> lines, const Form<K>& surface);

/// Builds a labeled configuration from 27 lines in arbitrary order by picking
/// a skew six (lexicographically first) and relabeling from it.
template <FieldType K>
LineConfiguration<K> configuration_from_lines(const std::vector<LineH<K>>& lines, const Form<K>& surface);

template <FieldType K>
struct TritangentPlane {
    PlaneH<K> plane;
    std::array<std::size_t, 3> lines;
};

template <FieldType K>
std::vector<TritangentPlane<K>> tritangent_planes(const LineConfiguration<K>& cfg);

struct DoubleSix {
    std::array<std::size_t, 6> upper;
    std::array<std::size_t, 6> lower;
    DoubleSix swapped() const { return {lower, upper}; }
    friend bool operator==(const DoubleSix&, const DoubleSix&) = default;
    friend auto operator<=>(const DoubleSix&, const DoubleSix&) = default;
};

/// Lexicographically least form under row swap and column permutations.
DoubleSix canonical(const DoubleSix& ds);
/// True when the incidence pattern of a double-six holds.
bool is_double_six(const Incidence& inc, const DoubleSix& ds);

/// The 36 double-sixes in canonical form, sorted: the (a|b) one first, then
/// the 15 of shape (a_i b_i c_j.. | ..), then the 20 of shape (a_i a_j a_k c.. | ..).
template <FieldType K>
std::vector<DoubleSix> double_sixes(const LineConfiguration<K>& cfg);

/// Completes either three columns' worth of a double-six (upper entries in
/// six[0..2], the matching lower entries in six[3..5]) or a full set of six
/// skew lines to the unique double-six containing it. The returned double-six
/// has the given lines in its upper/lower rows in the given order.
template <FieldType K>
DoubleSix complete_half(const LineConfiguration<K>& cfg, const std::array<std::size_t, 6>& six);

template <FieldType K>
struct SteinerSet {
    std::array<std::array<std::size_t, 3>, 3> grid;
    std::array<PlaneH<K>, 3> rows;
    std::array<PlaneH<K>, 3> columns;
    /// surface = s * rho1 rho2 rho3 + t * sigma1 sigma2 sigma3
    K s;
    K t;
};

template <FieldType K>
std::vector<SteinerSet<K>> steiner_sets(const LineConfiguration<K>& cfg);

template <FieldType K>
struct Relabeling {
    LineConfiguration<K> config;
    /// new index -> old index
    std::array<std::size_t, kLineCount> old_index;
};

/// New labeling with the given skew six as a1..a6.
template <FieldType K>
Relabeling<K> relabel(const LineConfiguration<K>& cfg, const std::array<std::size_t, 6>& skew_six);

/// Index of the line in cfg equal to l, or npos.
template <FieldType K>
std::size_t find_line(const LineConfiguration<K>& cfg, const LineH<K>& l);

/// Third line of the tritangent plane through two meeting lines.
std::size_t third_line(const Incidence& inc, std::size_t i, std::size_t j);

}  // namespace cubicdet
