#pragma once

// Built-in example surfaces.

#include <string>

#include "cubicdet/surface.hpp"

namespace cubicdet {

/// The six points (1,0,0), (0,1,0), (0,0,1), (1,1,1), (1,w,w^2), (1,w^2,w).
std::array<PointP2<Eisenstein>, 6> fermat_points();

/// L with rows (x1 x1 x2 x2), (x2 wx2 wx0 x0), (wx0 x0 x1 wx1).
HilbertBurchL<Eisenstein> fermat_L();

/// Fermat cubic as the blow-up of fermat_points() with the pencil of fermat_L().
BlowupSurface<Eisenstein> fermat_blowup();

/// z0^3 + z1^3 + z2^3 + z3^3
template <FieldType K>
Form<K> fermat_form();

/// Sum z_i^3 - (sum z_i)^3
template <FieldType K>
Form<K> clebsch_form();

/// (25/6 z0^2 + z1^2)(z0 + z2) - z3 (z3 - z2/2)(z3 - 2 z2/3), a real cubic with
/// 3 real lines and 24 lines of the second kind.
template <FieldType K>
Form<K> f5_form();

/// Builtin names accepted by the command line: fermat, f5paper, clebsch.
bool is_builtin(const std::string& name);

}  // namespace cubicdet
