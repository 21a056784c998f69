#pragma once

#include <array>
#include <vector>

#include "websym/web.hpp"

namespace websym {

/// Infinitesimal generator X = a1 d/dx + a2 d/dy (or d/du, d/dv).
struct VectorField {
  Expr a1, a2;
  CoordPair coords = CoordPair::xy;

  /// Directional derivative X(f).
  Expr apply(const Expr& f) const;
  bool is_polynomial() const;
  bool operator==(const VectorField& o) const {
    return coords == o.coords && a1 == o.a1 && a2 == o.a2;
  }
};

VectorField make_field(const Expr& a1, const Expr& a2, CoordPair coords = CoordPair::xy);
VectorField parse_field(const std::string& a1, const std::string& a2,
                        CoordPair coords = CoordPair::xy);
std::string render(const VectorField& f);

/// First-order prolongation coefficient of X, with y' written as z:
/// eta = dx(a2) + z (dy(a2) - dx(a1)) - z^2 dy(a1).
Expr prolong(const VectorField& f);

/// Left-hand side of the determining equation of leaf `leaf` (0-based):
/// -a1 dx(p) - a2 dy(p) + dx(a2) + (dy(a2) - dx(a1)) p - dy(a1) p^2.
Expr determining_equation(const Web& w, int leaf, const VectorField& f);

/// Same, over the exact rational-function field. Requires a rational slope
/// and polynomial field components.
RatFunc determining_equation_rat(const Web& w, int leaf, const VectorField& f);

/// Exact check that f solves every determining equation of w.
bool is_exact_symmetry(const Web& w, const VectorField& f);

/// Vandermonde normalization of the determining system for d >= 3 webs with
/// rational slopes. G = V_{1:3}^{-1} M_{1:3} is pinned by the identity
/// V_{1:3} G = M_{1:3}; its rows are reported under the (star_d) labels
/// (g_d,h_d), (g_{d-1},h_{d-1}), (g_{d-2},h_{d-2}) matching the column
/// (-dx a2, dx a1 - dy a2, dy a1). C_d = -M_{4:d} + V_{4:d} G; on every
/// symmetry, C_d (a1,a2)^T = 0.
struct NormalizedSystem {
  int d = 0;
  std::array<std::array<RatFunc, 2>, 3> g;          // rows of G
  std::vector<std::array<RatFunc, 2>> compatibility;  // C_d, (d-3) x 2
};

NormalizedSystem normalized_system(const Web& w);

/// Checks V_{1:3} G == M_{1:3} exactly (independent adjugate validation).
bool reconstruction_identity_holds(const Web& w, const NormalizedSystem& ns);

/// The closed-form coefficient block computed directly from p1, p2, p3
/// (Lagrange-style denominators (p_i - p_j)); the h's use d/dy in place of
/// d/dx. Cross-check: g_k == -G[k-1][0] and h_k == -G[k-1][1].
struct ExplicitG {
  RatFunc g1, g2, g3;
  RatFunc h1, h2, h3;
};

ExplicitG explicit_g_coefficients(const Web& w);

}  // namespace websym
