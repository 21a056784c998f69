#pragma once

#include <optional>
#include <string>
#include <vector>

#include "websym/convert.hpp"
#include "websym/expr.hpp"
#include "websym/polyring.hpp"
#include "websym/ratfunc.hpp"

namespace websym {

/// Working coordinate pair of a web. z always denotes the fiber variable y'.
enum class CoordPair { xy, uv };

Var coord1(CoordPair c);
Var coord2(CoordPair c);
const char* coord_pair_name(CoordPair c);

/// One leaf slope: the expression form is always present, the RatFunc form
/// when the slope is a rational function (the gate into the exact pipeline).
struct Slope {
  Expr expr;
  std::optional<RatFunc> rat;
};

/// Implicit planar d-web. Immutable after construction. A web carries at
/// least one of: presentation coefficients a0..ad (a0 != 0), prepared slopes
/// p1..pd (pairwise distinct), or foliation submersions F1..Fd. Leaf indices
/// are 0-based throughout the API.
class Web {
 public:
  /// Coefficient form a0..ad of P_F = a0 z^d + ... + ad; a0 != 0 required.
  static Web from_coefficients(std::vector<MPoly> a, CoordPair coords = CoordPair::xy,
                               std::string label = {});
  /// Prepared (monic) form from the slope list; slopes must be pairwise
  /// distinct (exactly for rational slopes, sampled otherwise).
  static Web from_slopes(std::vector<Expr> slopes, CoordPair coords = CoordPair::xy,
                         std::string label = {});
  /// Slopes p_i = -dFi/dx / dFi/dy from submersions. A leaf with dFi/dy == 0
  /// raises VerticalLeafError; apply change_vars first in that case.
  static Web from_foliations(std::vector<Expr> f, CoordPair coords = CoordPair::xy,
                             std::string label = {});
  /// Like from_foliations but keeps vertical leaves. The resulting web has no
  /// slope list and is usable only with the numeric pipeline.
  static Web from_foliations_numeric(std::vector<Expr> f, CoordPair coords = CoordPair::xy,
                                     std::string label = {});

  int degree() const { return d_; }
  CoordPair coords() const { return coords_; }
  Var var1() const { return coord1(coords_); }
  Var var2() const { return coord2(coords_); }
  const std::string& label() const { return label_; }

  bool has_slopes() const { return !slopes_.empty(); }
  const std::vector<Slope>& slopes() const;
  bool rational_slopes() const;
  const RatFunc& slope_rat(int leaf) const;

  bool has_foliations() const { return !foliations_.empty(); }
  const std::vector<Expr>& foliations() const;

  /// True when a coefficient form is stored or derivable (rational slopes).
  bool has_coefficients() const;
  /// a0..ad; for slope-form webs the common denominator is cleared into a0.
  const std::vector<MPoly>& coefficients() const;
  /// P_F(z; x, y) as a polynomial in (coords, z).
  MPoly presentation() const;

  /// z-discriminant of P_F. Throws NotRationalError when no coefficient form
  /// exists (use the numeric pipeline instead).
  MPoly discriminant() const;
  /// Reduced discriminant prod_{i<j} (pi - pj)^2 of the monic prepared form;
  /// requires rational slopes. Equals 1 for d < 2.
  RatFunc reduced_discriminant() const;

  /// True iff the factorization condition holds at the exact rational point:
  /// Res_z(P_F, dP_F/dz) != 0, equivalently pairwise distinct slopes there.
  bool check_factorization_condition(const Rat& c1, const Rat& c2) const;

 private:
  int d_ = 0;
  CoordPair coords_ = CoordPair::xy;
  std::string label_;
  std::vector<MPoly> coeffs_;      // empty unless coefficient form available
  std::vector<Slope> slopes_;      // empty for coefficient-only / vertical webs
  std::vector<Expr> foliations_;   // empty unless built from submersions

  void derive_coefficients_from_slopes();
  void check_slopes_distinct() const;
};

/// Substitutes old coordinates by expressions in the new ones inside a
/// foliation-form web and rebuilds it (checked) in the new coordinates:
/// G_i = F_i(x(u,v), y(u,v)). The symmetry algebra is unchanged up to the
/// corresponding isomorphism.
Web change_vars(const Web& w, const Expr& old_var1_in_new, const Expr& old_var2_in_new,
                CoordPair new_coords, std::string label = {});

}  // namespace websym
