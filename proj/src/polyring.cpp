#include "websym/polyring.hpp"

#include "websym/error.hpp"

namespace websym {

std::vector<std::vector<MPoly>> sylvester_matrix(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero())
    throw ValidationError("resultant of the zero polynomial");
  int dp = p.degree_in(v);
  int dq = q.degree_in(v);
  if (dp < 1 || dq < 1)
    throw ValidationError("resultant requires positive degree in the eliminated variable");
  auto pc = p.coeffs_in(v);  // ascending
  auto qc = q.coeffs_in(v);
  std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
  // dq rows of p's coefficients (descending), then dp rows of q's.
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[r][r + k] = pc[static_cast<std::size_t>(dp - k)];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = qc[static_cast<std::size_t>(dq - k)];
  return m;
}

MPoly sylvester_resultant(const MPoly& p, const MPoly& q, Var v) {
  return bareiss_det(sylvester_matrix(p, q, v));
}

MPoly z_discriminant(const MPoly& p, Var v) {
  int d = p.degree_in(v);
  if (d < 2) throw ValidationError("discriminant requires degree >= 2");
  MPoly a0 = p.coeffs_in(v).back();
  if (a0.is_zero()) throw ValidationError("zero leading coefficient");
  MPoly res = sylvester_resultant(p, p.diff(v), v);
  int sign = (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  MPoly divisor = sign < 0 ? -a0 : a0;
  if (res.is_zero()) return MPoly();
  auto delta = divides(divisor, res);
  if (!delta)
    throw InternalError("resultant is not divisible by the leading coefficient");
  return *delta;
}

}  // namespace websym
