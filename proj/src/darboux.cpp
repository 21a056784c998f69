#include "websym/darboux.hpp"

#include <algorithm>

#include "websym/error.hpp"
#include "websym/linalg.hpp"

namespace websym {

namespace {

std::pair<MPoly, MPoly> polynomial_components(const VectorField& x) {
  auto a1 = to_mpoly(x.a1);
  auto a2 = to_mpoly(x.a2);
  if (!a1 || !a2)
    throw NotRationalError("operation requires a polynomial vector field");
  return {std::move(*a1), std::move(*a2)};
}

}  // namespace

std::optional<MPoly> cofactor(const VectorField& x, const MPoly& g) {
  if (g.is_zero()) throw ValidationError("cofactor of the zero polynomial");
  auto [a1, a2] = polynomial_components(x);
  MPoly xg = a1 * g.diff(coord1(x.coords)) + a2 * g.diff(coord2(x.coords));
  return divides(g, xg);
}

bool der_membership(const VectorField& x, const MPoly& g) {
  return cofactor(x, g).has_value();
}

std::vector<RatFunc> pairwise_slope_cofactors(const Web& w, const VectorField& x) {
  if (!is_exact_symmetry(w, x))
    throw NotASymmetryError("field does not satisfy the determining equations");
  auto a1 = to_ratfunc(x.a1);
  auto a2 = to_ratfunc(x.a2);
  Var vx = w.var1();
  Var vy = w.var2();
  RatFunc trace = a1->diff(vx) - a2->diff(vy);
  RatFunc shear = a1->diff(vy);
  std::vector<RatFunc> out;
  for (int i = 0; i < w.degree(); ++i) {
    for (int j = i + 1; j < w.degree(); ++j) {
      const RatFunc& pi = w.slope_rat(i);
      const RatFunc& pj = w.slope_rat(j);
      RatFunc lambda = -(trace - shear * (pi + pj));
      // X(p_i - p_j) = lambda (p_i - p_j), exact.
      RatFunc diff = pi - pj;
      RatFunc xdiff = *a1 * diff.diff(vx) + *a2 * diff.diff(vy);
      if (xdiff != lambda * diff)
        throw InternalError("slope-difference cofactor identity failed");
      out.push_back(std::move(lambda));
    }
  }
  return out;
}

DiscriminantCofactor discriminant_cofactor(const Web& w, const VectorField& x) {
  DiscriminantCofactor out;
  auto lambdas = pairwise_slope_cofactors(w, x);
  RatFunc sum;
  for (const RatFunc& l : lambdas) sum = sum + l;
  out.k = RatFunc(Rat(2)) * sum;
  out.reduced = w.reduced_discriminant();
  auto a1 = to_ratfunc(x.a1);
  auto a2 = to_ratfunc(x.a2);
  RatFunc xdelta =
      *a1 * out.reduced.diff(w.var1()) + *a2 * out.reduced.diff(w.var2());
  if (xdelta != out.k * out.reduced)
    throw InternalError("reduced-discriminant cofactor identity failed");
  if (w.has_coefficients() && w.degree() >= 2 && x.is_polynomial())
    out.full_k = cofactor(x, w.discriminant());
  return out;
}

std::optional<std::vector<Rat>> first_integral_search(
    const std::vector<MPoly>& cofactors) {
  if (cofactors.empty()) throw ValidationError("no cofactors supplied");
  // Rows indexed by the union of monomials, one column per cofactor.
  std::map<Mono, std::size_t, MonoLess> rows;
  for (const MPoly& k : cofactors)
    for (const auto& [m, c] : k.terms()) rows.try_emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, i] : rows) i = next++;
  QMat a(next, QVec(cofactors.size(), Rat(0)));
  for (std::size_t j = 0; j < cofactors.size(); ++j)
    for (const auto& [m, c] : cofactors[j].terms()) a[rows[m]][j] = c;
  auto basis = exact_nullspace(a, cofactors.size());
  if (basis.empty()) return std::nullopt;
  // Normalize the first kernel vector to coprime integers, first entry > 0.
  QVec lambda = basis.front();
  Int den_lcm = 1;
  for (const Rat& q : lambda)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  Int g = 0;
  std::vector<Int> ints;
  for (const Rat& q : lambda) {
    Int v = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  int lead_sign = 0;
  for (const Int& v : ints)
    if (v != 0) {
      lead_sign = sgn(v);
      break;
    }
  std::vector<Rat> out;
  for (Int& v : ints) {
    Int q = v / g;
    out.push_back(Rat(lead_sign < 0 ? -q : q));
  }
  return out;
}

Expr first_integral_product(const std::vector<MPoly>& curves,
                            const std::vector<Rat>& lambda) {
  if (curves.size() != lambda.size())
    throw ValidationError("curve/exponent count mismatch");
  std::vector<Expr> factors;
  for (std::size_t i = 0; i < curves.size(); ++i)
    factors.push_back(Expr::power(curves[i].to_expr(), lambda[i]));
  return Expr::product(std::move(factors));
}

DarbouxBound darboux_bound_report(const VectorField& x, int curve_count) {
  auto [a1, a2] = polynomial_components(x);
  DarbouxBound b;
  b.field_degree = std::max(std::max(a1.total_degree(), a2.total_degree()), 0);
  b.threshold = static_cast<long>(b.field_degree) * (b.field_degree + 1) / 2 + 1;
  b.curve_count = curve_count;
  b.guaranteed = curve_count >= b.threshold;
  return b;
}

}  // namespace websym
