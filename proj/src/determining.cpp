#include "websym/determining.hpp"

#include "websym/error.hpp"

namespace websym {

Expr VectorField::apply(const Expr& f) const {
  return a1 * diff(f, coord1(coords)) + a2 * diff(f, coord2(coords));
}

bool VectorField::is_polynomial() const {
  auto r1 = to_ratfunc(a1);
  auto r2 = to_ratfunc(a2);
  return r1 && r2 && r1->is_polynomial() && r2->is_polynomial();
}

VectorField make_field(const Expr& a1, const Expr& a2, CoordPair coords) {
  return VectorField{a1, a2, coords};
}

VectorField parse_field(const std::string& a1, const std::string& a2, CoordPair coords) {
  return VectorField{parse_expr(a1), parse_expr(a2), coords};
}

std::string render(const VectorField& f) {
  auto wrap = [](const Expr& e) {
    std::string s = render(e);
    if (e.kind() == Expr::Kind::Sum) return "(" + s + ")";
    return s;
  };
  std::string d1 = std::string("d") + var_name(coord1(f.coords));
  std::string d2 = std::string("d") + var_name(coord2(f.coords));
  if (f.a1.is_zero() && f.a2.is_zero()) return "0";
  std::string out;
  if (!f.a1.is_zero()) out += (f.a1.is_one() ? d1 : wrap(f.a1) + "*" + d1);
  if (!f.a2.is_zero()) {
    if (!out.empty()) out += " + ";
    out += (f.a2.is_one() ? d2 : wrap(f.a2) + "*" + d2);
  }
  return out;
}

Expr prolong(const VectorField& f) {
  Var vx = coord1(f.coords);
  Var vy = coord2(f.coords);
  Expr zz = Expr::variable(Var::z);
  return diff(f.a2, vx) + zz * (diff(f.a2, vy) - diff(f.a1, vx)) -
         zz * zz * diff(f.a1, vy);
}

Expr determining_equation(const Web& w, int leaf, const VectorField& f) {
  if (f.coords != w.coords())
    throw ValidationError("field and web use different coordinate pairs");
  const Slope& s = w.slopes().at(static_cast<std::size_t>(leaf));
  Var vx = w.var1();
  Var vy = w.var2();
  const Expr& p = s.expr;
  return -f.a1 * diff(p, vx) - f.a2 * diff(p, vy) + diff(f.a2, vx) +
         (diff(f.a2, vy) - diff(f.a1, vx)) * p - diff(f.a1, vy) * p * p;
}

RatFunc determining_equation_rat(const Web& w, int leaf, const VectorField& f) {
  if (f.coords != w.coords())
    throw ValidationError("field and web use different coordinate pairs");
  const RatFunc& p = w.slope_rat(leaf);
  auto a1 = to_ratfunc(f.a1);
  auto a2 = to_ratfunc(f.a2);
  if (!a1 || !a2) throw NotRationalError("field components are not rational functions");
  Var vx = w.var1();
  Var vy = w.var2();
  RatFunc px = p.diff(vx), py = p.diff(vy);
  return -(*a1) * px - (*a2) * py + a2->diff(vx) +
         (a2->diff(vy) - a1->diff(vx)) * p - a1->diff(vy) * p * p;
}

bool is_exact_symmetry(const Web& w, const VectorField& f) {
  for (int i = 0; i < w.degree(); ++i)
    if (!determining_equation_rat(w, i, f).is_zero()) return false;
  return true;
}

namespace {

// Adjugate inverse of the 3x3 Vandermonde rows (1, p_i, p_i^2).
std::array<std::array<RatFunc, 3>, 3> vandermonde_inverse(const RatFunc& p1,
                                                          const RatFunc& p2,
                                                          const RatFunc& p3) {
  std::array<std::array<RatFunc, 3>, 3> v{{{RatFunc(Rat(1)), p1, p1 * p1},
                                           {RatFunc(Rat(1)), p2, p2 * p2},
                                           {RatFunc(Rat(1)), p3, p3 * p3}}};
  RatFunc det = (p2 - p1) * (p3 - p1) * (p3 - p2);
  if (det.is_zero()) throw NotInGeneralPosition("coincident slopes in V_{1:3}");
  std::array<std::array<RatFunc, 3>, 3> inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
      int c1 = (j + 1) % 3, c2 = (j + 2) % 3;
      // adj(V)_{ji} with the cyclic index trick absorbing the cofactor sign.
      inv[j][i] = (v[r1][c1] * v[r2][c2] - v[r1][c2] * v[r2][c1]) / det;
    }
  }
  return inv;
}

std::array<RatFunc, 2> slope_derivatives(const Web& w, int leaf) {
  const RatFunc& p = w.slope_rat(leaf);
  return {p.diff(w.var1()), p.diff(w.var2())};
}

}  // namespace

NormalizedSystem normalized_system(const Web& w) {
  int d = w.degree();
  if (d < 3) throw ValidationError("normalized system requires d >= 3");
  if (!w.rational_slopes())
    throw NotRationalError("normalized system requires rational slopes");
  auto vinv = vandermonde_inverse(w.slope_rat(0), w.slope_rat(1), w.slope_rat(2));
  std::array<std::array<RatFunc, 2>, 3> m13;
  for (int i = 0; i < 3; ++i) m13[static_cast<std::size_t>(i)] = slope_derivatives(w, i);

  NormalizedSystem ns;
  ns.d = d;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) {
      RatFunc s;
      for (int k = 0; k < 3; ++k)
        s = s + vinv[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                    m13[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      ns.g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
    }
  for (int i = 3; i < d; ++i) {
    const RatFunc& p = w.slope_rat(i);
    auto mi = slope_derivatives(w, i);
    std::array<RatFunc, 3> vrow{RatFunc(Rat(1)), p, p * p};
    std::array<RatFunc, 2> row;
    for (int c = 0; c < 2; ++c) {
      RatFunc s = -mi[static_cast<std::size_t>(c)];
      for (int k = 0; k < 3; ++k)
        s = s + vrow[static_cast<std::size_t>(k)] *
                    ns.g[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      row[static_cast<std::size_t>(c)] = s;
    }
    ns.compatibility.push_back(std::move(row));
  }
  return ns;
}

bool reconstruction_identity_holds(const Web& w, const NormalizedSystem& ns) {
  std::array<RatFunc, 3> p{w.slope_rat(0), w.slope_rat(1), w.slope_rat(2)};
  for (int i = 0; i < 3; ++i) {
    std::array<RatFunc, 3> vrow{RatFunc(Rat(1)), p[static_cast<std::size_t>(i)],
                                p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)]};
    auto mi = slope_derivatives(w, i);
    for (int c = 0; c < 2; ++c) {
      RatFunc s;
      for (int k = 0; k < 3; ++k)
        s = s + vrow[static_cast<std::size_t>(k)] *
                    ns.g[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      if (s != mi[static_cast<std::size_t>(c)]) return false;
    }
  }
  return true;
}

ExplicitG explicit_g_coefficients(const Web& w) {
  if (w.degree() < 3) throw ValidationError("explicit coefficients require d >= 3");
  if (!w.rational_slopes())
    throw NotRationalError("explicit coefficients require rational slopes");
  RatFunc p1 = w.slope_rat(0), p2 = w.slope_rat(1), p3 = w.slope_rat(2);
  RatFunc d21 = p2 - p1, d31 = p3 - p1, d32 = p3 - p2;
  if (d21.is_zero() || d31.is_zero() || d32.is_zero())
    throw NotInGeneralPosition("coincident slopes");
  auto block = [&](Var v) {
    RatFunc q1 = p1.diff(v), q2 = p2.diff(v), q3 = p3.diff(v);
    RatFunc c1 = -(p2 * p3) / (d31 * d21) * q1 + (p1 * p3) / (d32 * d21) * q2 -
                 (p1 * p2) / (d31 * d32) * q3;
    RatFunc c2 = (p2 + p3) / (d31 * d21) * q1 - (p1 + p3) / (d32 * d21) * q2 +
                 (p1 + p2) / (d31 * d32) * q3;
    RatFunc c3 = -RatFunc(Rat(1)) / (d31 * d21) * q1 + RatFunc(Rat(1)) / (d32 * d21) * q2 -
                 RatFunc(Rat(1)) / (d31 * d32) * q3;
    return std::array<RatFunc, 3>{c1, c2, c3};
  };
  auto gs = block(w.var1());
  auto hs = block(w.var2());
  return ExplicitG{gs[0], gs[1], gs[2], hs[0], hs[1], hs[2]};
}

}  // namespace websym
