#pragma once

// Floating point search for the 27 lines of a smooth cubic surface.

#include <vector>

#include "cubicdet/lineconfig.hpp"
#include "cubicdet/numeric.hpp"

namespace cubicdet {

class IncompleteEnumeration : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A line spanned by e_p + a e_r + b e_s and e_q + c e_r + d e_s, where
/// (p, q) are the pivot coordinates of chart `chart` and r < s the others.
struct LineChartSolution {
    std::size_t chart = 0;
    std::array<cplx, 4> params{};
    double residual = 0.0;
};

struct NumericLines {
    std::vector<LineH<ComplexFloat>> lines;
    std::vector<bool> real;
    std::vector<LineChartSolution> solutions;
    /// Largest |F| over the 5 certification points of any line (F and points normalized).
    double max_residual = 0.0;
};

struct NumericLineOptions {
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::size_t starts_per_chart = 2000;
};

template <FieldType K>
NumericLines find_lines_numeric(const Form<K>& f, const NumericLineOptions& opts = {});

/// Real planes through line r (an index into cfg) that meet the surface in r
/// and a pair of conjugate lines, normalized so the first coefficient of
/// largest magnitude is 1 and the vector is real.
std::vector<PlaneH<ComplexFloat>> real_tritangents_through(const LineConfiguration<ComplexFloat>& cfg, std::size_t r);

/// Same, for a real line of F given by its forms.
template <FieldType K>
std::vector<PlaneH<ComplexFloat>> real_tritangents_through(const Form<K>& f, const LineH<ComplexFloat>& r,
                                                           const NumericLineOptions& opts = {});

/// Labeled configuration from numerically found lines.
template <FieldType K>
LineConfiguration<ComplexFloat> numeric_configuration(const Form<K>& f, const NumericLineOptions& opts = {});

/// Pairing of two 27-line lists minimizing the total line distance (greedy on
/// the sorted distance list); returns the largest matched distance.
double match_line_sets(const std::vector<LineH<ComplexFloat>>& a, const std::vector<LineH<ComplexFloat>>& b);

}  // namespace cubicdet
