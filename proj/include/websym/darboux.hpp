#pragma once

#include <optional>
#include <vector>

#include "websym/determining.hpp"

namespace websym {

/// Cofactor of an invariant algebraic curve {g = 0}: X(g) = K g. Returns
/// nullopt (NotInvariant) when g does not divide X(g). X must be polynomial.
std::optional<MPoly> cofactor(const VectorField& x, const MPoly& g);

/// True iff g is a Darboux polynomial of X (the curve is invariant).
bool der_membership(const VectorField& x, const MPoly& g);

/// The multipliers of the pairwise slope differences of a symmetry:
/// X(p_i - p_j) = lambda_{i,j} (p_i - p_j) with
/// lambda_{i,j} = -(dx(a1) - dy(a2) - dy(a1)(p_i + p_j)).
/// Pairs are ordered (0,1), (0,2), ..., (d-2,d-1). The identity is verified
/// exactly; X must be an exact symmetry of w (NotASymmetryError otherwise).
std::vector<RatFunc> pairwise_slope_cofactors(const Web& w, const VectorField& x);

/// Cofactor K = 2 sum lambda_{i,j} of the reduced discriminant: verifies
/// X(Delta~) = K Delta~ exactly. Rational slopes and polynomial X required;
/// use numverify for the numeric counterpart.
struct DiscriminantCofactor {
  RatFunc reduced;   // Delta~
  RatFunc k;         // 2 * sum of lambda_{i,j}
  /// Cofactor of the full polynomial discriminant, when the web has a
  /// coefficient form and the division succeeds.
  std::optional<MPoly> full_k;
};
DiscriminantCofactor discriminant_cofactor(const Web& w, const VectorField& x);

/// Exact nonzero kernel vector of sum lambda_i K_i = 0, normalized to
/// coprime integers with positive first entry; nullopt when only the zero
/// combination exists.
std::optional<std::vector<Rat>> first_integral_search(const std::vector<MPoly>& cofactors);

/// Formal first integral g_1^l1 ... g_p^lp for a kernel vector.
Expr first_integral_product(const std::vector<MPoly>& curves, const std::vector<Rat>& lambda);

/// Darboux bound: with deg X = m and p invariant curves, p >= m(m+1)/2 + 1
/// guarantees a vanishing cofactor combination. Informational.
struct DarbouxBound {
  int field_degree = 0;
  long threshold = 0;
  int curve_count = 0;
  bool guaranteed = false;
};
DarbouxBound darboux_bound_report(const VectorField& x, int curve_count);

}  // namespace websym
