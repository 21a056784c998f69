#pragma once

#include <optional>
#include <vector>

#include "websym/mpoly.hpp"
#include "websym/rational.hpp"

namespace websym {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major; rows may be empty

/// Exact rank via fraction-free forward elimination.
int rank(QMat m);

/// Basis of the right nullspace {v : M v = 0} in reduced echelon convention:
/// one vector per free column (ascending), with that coordinate 1 and the
/// other free coordinates 0. Empty result means the nullspace is trivial.
/// `ncols` is required because `m` may have zero rows.
std::vector<QVec> exact_nullspace(const QMat& m, std::size_t ncols);

/// One exact solution of A x = b with all free variables 0, or nullopt when
/// inconsistent.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination; every interior division is exact by construction.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m);

}  // namespace websym
