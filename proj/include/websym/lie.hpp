#pragma once

#include <optional>
#include <vector>

#include "websym/determining.hpp"

namespace websym {

/// Commutator [X, Y] = (X(Y1) - Y(X1), X(Y2) - Y(X2)).
VectorField bracket(const VectorField& x, const VectorField& y);

/// Closure report of a candidate basis. For polynomial bases, span
/// membership and structure constants are exact; otherwise membership is a
/// numeric least-squares fit at sample points ("numeric closure") with
/// constants snapped to nearby rationals.
struct AlgebraReport {
  std::vector<VectorField> basis;
  int dimension = 0;
  bool closed = false;
  bool numeric = false;
  /// structure[i][j][k] = c^k_{ij} with [X_i, X_j] = sum_k c^k_{ij} X_k;
  /// filled only when closed.
  std::vector<std::vector<std::vector<Rat>>> structure;
  /// First bracket that escaped the span, when !closed.
  std::optional<std::pair<int, int>> offending;
  /// Worst membership residual of the numeric path.
  double max_residual = 0.0;
};

AlgebraReport closure_check(const std::vector<VectorField>& basis);

/// Antisymmetry and the Jacobi identity on the structure constants.
bool structure_constants_consistent(const AlgebraReport& report);

}  // namespace websym
