#pragma once

#include "websym/linalg.hpp"
#include "websym/mpoly.hpp"

namespace websym {

/// Sylvester matrix of p and q with respect to v, entries polynomial in the
/// remaining variables. Both degrees in v must be positive.
std::vector<std::vector<MPoly>> sylvester_matrix(const MPoly& p, const MPoly& q, Var v);

/// Res_v(p, q) = det of the Sylvester matrix, by fraction-free elimination.
MPoly sylvester_resultant(const MPoly& p, const MPoly& q, Var v);

/// Discriminant with the sign convention fixed by the resultant identity
/// Res_v(p, dp/dv) = (-1)^(d(d-1)/2) * a0 * Delta (exact division; an
/// inexact division is an internal error). Requires deg_v(p) >= 2.
MPoly z_discriminant(const MPoly& p, Var v);

}  // namespace websym
