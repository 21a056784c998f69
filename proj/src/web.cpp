#include "websym/web.hpp"

#include <algorithm>
#include <cmath>

#include "websym/detrand.hpp"
#include "websym/error.hpp"

namespace websym {

Var coord1(CoordPair c) { return c == CoordPair::xy ? Var::x : Var::u; }
Var coord2(CoordPair c) { return c == CoordPair::xy ? Var::y : Var::v; }
const char* coord_pair_name(CoordPair c) { return c == CoordPair::xy ? "x,y" : "u,v"; }

namespace {

constexpr std::uint64_t kSampleSeed = 0x7eb5a11d;

unsigned coord_mask(CoordPair c) {
  return (1u << static_cast<int>(coord1(c))) | (1u << static_cast<int>(coord2(c)));
}

void check_vars_within(unsigned mask, CoordPair coords, const char* what) {
  if (mask & ~coord_mask(coords))
    throw ValidationError(std::string(what) + " may only involve the web coordinates (" +
                          coord_pair_name(coords) + ")");
}

// Numeric probe at deterministic sample points; returns the values of e where
// it evaluates, up to `want` of them.
std::vector<Complex> probe(const Expr& e, CoordPair coords, int want) {
  DetRand rng(kSampleSeed);
  std::vector<Complex> vals;
  for (int attempt = 0; attempt < 200 && static_cast<int>(vals.size()) < want; ++attempt) {
    Point at;
    at[coord1(coords)] = Complex(rng.in(0.5, 2.5), 0.0);
    at[coord2(coords)] = Complex(rng.in(0.5, 2.5), 0.0);
    try {
      vals.push_back(eval_complex(e, at));
    } catch (const EvalError&) {
      continue;
    }
  }
  return vals;
}

bool numerically_zero(const Expr& e, CoordPair coords) {
  auto vals = probe(e, coords, 20);
  if (vals.empty()) return false;  // nowhere evaluable; treat as nonzero
  for (const Complex& c : vals)
    if (std::abs(c) > 1e-9) return false;
  return true;
}

}  // namespace

const std::vector<Slope>& Web::slopes() const {
  if (slopes_.empty())
    throw NotRationalError("web has no prepared slopes; use the numeric pipeline");
  return slopes_;
}

bool Web::rational_slopes() const {
  if (slopes_.empty()) return false;
  return std::all_of(slopes_.begin(), slopes_.end(),
                     [](const Slope& s) { return s.rat.has_value(); });
}

const RatFunc& Web::slope_rat(int leaf) const {
  const Slope& s = slopes().at(static_cast<std::size_t>(leaf));
  if (!s.rat) throw NotRationalError("slope is not a rational function");
  return *s.rat;
}

const std::vector<Expr>& Web::foliations() const {
  if (foliations_.empty()) throw ValidationError("web has no foliation form");
  return foliations_;
}

bool Web::has_coefficients() const { return !coeffs_.empty(); }

const std::vector<MPoly>& Web::coefficients() const {
  if (coeffs_.empty())
    throw NotRationalError("web has no coefficient form (non-rational slopes)");
  return coeffs_;
}

MPoly Web::presentation() const {
  const auto& a = coefficients();
  MPoly p;
  for (int k = 0; k <= d_; ++k)
    p += a[static_cast<std::size_t>(k)] * MPoly::variable(Var::z, d_ - k);
  return p;
}

Web Web::from_coefficients(std::vector<MPoly> a, CoordPair coords, std::string label) {
  if (a.empty()) throw ValidationError("coefficient list is empty");
  if (a.front().is_zero()) throw ValidationError("leading coefficient a0 is zero");
  for (const MPoly& c : a) check_vars_within(c.var_mask(), coords, "coefficients");
  Web w;
  w.d_ = static_cast<int>(a.size()) - 1;
  if (w.d_ < 1) throw ValidationError("web degree must be at least 1");
  w.coords_ = coords;
  w.label_ = std::move(label);
  w.coeffs_ = std::move(a);
  if (w.d_ == 1) {
    // Single leaf: p = -a1/a0 is always rational.
    RatFunc p(-w.coeffs_[1], w.coeffs_[0]);
    w.slopes_.push_back({p.to_expr(), p});
  }
  return w;
}

void Web::check_slopes_distinct() const {
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes_.size(); ++j) {
      const Slope& a = slopes_[i];
      const Slope& b = slopes_[j];
      bool coincident;
      if (a.rat && b.rat) {
        coincident = (*a.rat == *b.rat);
      } else {
        coincident = numerically_zero(a.expr - b.expr, coords_);
      }
      if (coincident)
        throw NotInGeneralPosition("slopes " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide");
    }
  }
}

void Web::derive_coefficients_from_slopes() {
  // Elementary symmetric functions: P = prod (z - p_i), then the common
  // denominator D is cleared into a0.
  std::vector<RatFunc> e(static_cast<std::size_t>(d_) + 1);
  e[0] = RatFunc(Rat(1));
  for (int i = 0; i < d_; ++i) {
    const RatFunc& p = *slopes_[static_cast<std::size_t>(i)].rat;
    for (int k = std::min(i + 1, d_); k >= 1; --k)
      e[static_cast<std::size_t>(k)] =
          e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * p;
  }
  MPoly den_lcm(Rat(1));
  for (int k = 1; k <= d_; ++k) den_lcm = lcm(den_lcm, e[static_cast<std::size_t>(k)].den());
  coeffs_.assign(static_cast<std::size_t>(d_) + 1, MPoly());
  coeffs_[0] = den_lcm;
  int sign = -1;
  for (int k = 1; k <= d_; ++k, sign = -sign) {
    const RatFunc& ek = e[static_cast<std::size_t>(k)];
    MPoly scaled = *divides(ek.den(), den_lcm) * ek.num();
    coeffs_[static_cast<std::size_t>(k)] = sign < 0 ? -scaled : scaled;
  }
}

Web Web::from_slopes(std::vector<Expr> slopes, CoordPair coords, std::string label) {
  if (slopes.empty()) throw ValidationError("slope list is empty");
  Web w;
  w.d_ = static_cast<int>(slopes.size());
  w.coords_ = coords;
  w.label_ = std::move(label);
  for (Expr& p : slopes) {
    check_vars_within(p.var_mask(), coords, "slopes");
    auto r = to_ratfunc(p);
    w.slopes_.push_back({std::move(p), std::move(r)});
  }
  w.check_slopes_distinct();
  if (w.rational_slopes()) w.derive_coefficients_from_slopes();
  return w;
}

namespace {

// Slope of the leaf {F = const}; nullopt when dF/dy vanishes identically.
std::optional<Expr> foliation_slope(const Expr& f, CoordPair coords) {
  Expr fx = diff(f, coord1(coords));
  Expr fy = diff(f, coord2(coords));
  auto fy_rat = to_ratfunc(fy);
  bool vertical = fy_rat ? fy_rat->is_zero() : numerically_zero(fy, coords);
  if (vertical) return std::nullopt;
  return simplified_quotient(-fx, fy);
}

}  // namespace

Web Web::from_foliations(std::vector<Expr> f, CoordPair coords, std::string label) {
  if (f.empty()) throw ValidationError("foliation list is empty");
  std::vector<Expr> slope_exprs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    check_vars_within(f[i].var_mask(), coords, "foliations");
    auto p = foliation_slope(f[i], coords);
    if (!p)
      throw VerticalLeafError(static_cast<int>(i) + 1,
                              "foliation " + std::to_string(i + 1) +
                                  " has vertical leaves (dF/dy == 0); change variables first");
    slope_exprs.push_back(std::move(*p));
  }
  Web w = Web::from_slopes(std::move(slope_exprs), coords, std::move(label));
  w.foliations_ = std::move(f);
  return w;
}

Web Web::from_foliations_numeric(std::vector<Expr> f, CoordPair coords, std::string label) {
  if (f.empty()) throw ValidationError("foliation list is empty");
  Web w;
  w.d_ = static_cast<int>(f.size());
  w.coords_ = coords;
  w.label_ = std::move(label);
  bool all_sloped = true;
  std::vector<Expr> slope_exprs;
  for (const Expr& fi : f) {
    check_vars_within(fi.var_mask(), coords, "foliations");
    auto p = foliation_slope(fi, coords);
    if (p) slope_exprs.push_back(std::move(*p));
    else all_sloped = false;
  }
  w.foliations_ = std::move(f);
  if (all_sloped) {
    for (Expr& p : slope_exprs) {
      auto r = to_ratfunc(p);
      w.slopes_.push_back({std::move(p), std::move(r)});
    }
    w.check_slopes_distinct();
    if (w.rational_slopes()) w.derive_coefficients_from_slopes();
  }
  return w;
}

MPoly Web::discriminant() const {
  if (!has_coefficients())
    throw NotRationalError("discriminant needs a coefficient form; use `verify` instead");
  if (d_ < 2) throw ValidationError("discriminant requires degree >= 2");
  return z_discriminant(presentation(), Var::z);
}

RatFunc Web::reduced_discriminant() const {
  if (!rational_slopes())
    throw NotRationalError("reduced discriminant requires rational slopes");
  RatFunc prod{Rat(1)};
  for (std::size_t i = 0; i < slopes_.size(); ++i)
    for (std::size_t j = i + 1; j < slopes_.size(); ++j) {
      RatFunc diff = *slopes_[i].rat - *slopes_[j].rat;
      prod = prod * diff * diff;
    }
  return prod;
}

bool Web::check_factorization_condition(const Rat& c1, const Rat& c2) const {
  std::map<Var, Rat> at{{var1(), c1}, {var2(), c2}};
  if (has_slopes()) {
    if (rational_slopes()) {
      for (std::size_t i = 0; i < slopes_.size(); ++i)
        for (std::size_t j = i + 1; j < slopes_.size(); ++j)
          if (slopes_[i].rat->eval(at) == slopes_[j].rat->eval(at)) return false;
      return true;
    }
    Point cat{{var1(), Complex(c1.get_d(), 0)}, {var2(), Complex(c2.get_d(), 0)}};
    for (std::size_t i = 0; i < slopes_.size(); ++i)
      for (std::size_t j = i + 1; j < slopes_.size(); ++j)
        if (std::abs(eval_complex(slopes_[i].expr - slopes_[j].expr, cat)) < 1e-12)
          return false;
    return true;
  }
  if (has_coefficients()) {
    if (d_ == 1) return coeffs_[0].eval(at) != 0;
    MPoly p = presentation();
    MPoly res = sylvester_resultant(p, p.diff(Var::z), Var::z);
    return res.eval(at) != 0;
  }
  // Foliation-only (numeric) web: pairwise transversality.
  Point cat{{var1(), Complex(c1.get_d(), 0)}, {var2(), Complex(c2.get_d(), 0)}};
  for (std::size_t i = 0; i < foliations_.size(); ++i)
    for (std::size_t j = i + 1; j < foliations_.size(); ++j) {
      Expr wedge = diff(foliations_[i], var1()) * diff(foliations_[j], var2()) -
                   diff(foliations_[i], var2()) * diff(foliations_[j], var1());
      if (std::abs(eval_complex(wedge, cat)) < 1e-12) return false;
    }
  return true;
}

Web change_vars(const Web& w, const Expr& old_var1_in_new, const Expr& old_var2_in_new,
                CoordPair new_coords, std::string label) {
  if (!w.has_foliations())
    throw ValidationError("change_vars is supported for foliation-form webs");
  std::map<Var, Expr> repl{{w.var1(), old_var1_in_new}, {w.var2(), old_var2_in_new}};
  std::vector<Expr> g;
  g.reserve(w.foliations().size());
  for (const Expr& f : w.foliations()) g.push_back(subst(f, repl));
  return Web::from_foliations(std::move(g), new_coords,
                              label.empty() ? w.label() : std::move(label));
}

}  // namespace websym
