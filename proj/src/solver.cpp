#include "websym/solver.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "websym/error.hpp"

namespace websym {

namespace {

// Ansatz monomials x^a y^b with a+b <= N, in a fixed deterministic order.
std::vector<Mono> ansatz_monomials(int degree_bound, CoordPair coords) {
  std::vector<Mono> out;
  int i1 = static_cast<int>(coord1(coords));
  int i2 = static_cast<int>(coord2(coords));
  for (int t = 0; t <= degree_bound; ++t)
    for (int b = 0; b <= t; ++b) {
      Mono m;
      m.e[i1] = t - b;
      m.e[i2] = b;
      out.push_back(m);
    }
  return out;
}

long memory_budget_cells() {
  if (const char* env = std::getenv("WEBSYM_MEMORY_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

struct LinearSystem {
  QMat rows;
  std::vector<MPoly> denominators;
};

// One block of equations per leaf: the determining equation, cleared of
// denominators, collected by monomial in the base coordinates.
LinearSystem build_system(const Web& w, const std::vector<Mono>& monos) {
  Var vx = w.var1();
  Var vy = w.var2();
  std::size_t ncols = 2 * monos.size();
  LinearSystem sys;
  for (int leaf = 0; leaf < w.degree(); ++leaf) {
    const RatFunc& p = w.slope_rat(leaf);
    RatFunc px = p.diff(vx);
    RatFunc py = p.diff(vy);
    RatFunc p2 = p * p;
    MPoly den = lcm(lcm(p.den(), p2.den()), lcm(px.den(), py.den()));
    RatFunc dd{den};
    // Cleared coefficients; each of these is polynomial by construction.
    auto cleared = [&](const RatFunc& r) {
      RatFunc s = r * dd;
      if (!s.is_polynomial())
        throw InternalError("denominator clearing left a rational function");
      return s.num();
    };
    MPoly cpx = cleared(px), cpy = cleared(py), cp = cleared(p), cp2 = cleared(p2);

    // contribution(a1 = m): -m*px - dx(m)*p - dy(m)*p^2   (times den)
    // contribution(a2 = m): -m*py + dx(m)*den + dy(m)*p   (times den)
    std::map<Mono, QVec, MonoLess> coeff_rows;
    auto add = [&](const MPoly& poly, std::size_t col) {
      for (const auto& [mono, c] : poly.terms()) {
        auto [it, fresh] = coeff_rows.try_emplace(mono, QVec(ncols, Rat(0)));
        it->second[col] += c;
      }
    };
    for (std::size_t k = 0; k < monos.size(); ++k) {
      MPoly m = MPoly::monomial(monos[k], Rat(1));
      MPoly mx = m.diff(vx);
      MPoly my = m.diff(vy);
      add(-(m * cpx) - mx * cp - my * cp2, k);
      add(-(m * cpy) + mx * den + my * cp, monos.size() + k);
    }
    for (auto& [mono, row] : coeff_rows) sys.rows.push_back(std::move(row));
    sys.denominators.push_back(std::move(den));
  }
  return sys;
}

VectorField field_from_vector(const QVec& v, const std::vector<Mono>& monos,
                              CoordPair coords) {
  MPoly a1, a2;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    a1 += MPoly::monomial(monos[k], v[k]);
    a2 += MPoly::monomial(monos[k], v[monos.size() + k]);
  }
  return VectorField{a1.to_expr(), a2.to_expr(), coords};
}

std::vector<VectorField> solve_raw(const Web& w, int degree_bound,
                                   std::vector<MPoly>* denominators) {
  if (degree_bound < 0) throw ValidationError("negative ansatz degree");
  if (!w.rational_slopes())
    throw NotRationalError("polynomial solve requires rational slopes; use `verify`");
  auto monos = ansatz_monomials(degree_bound, w.coords());
  long cells = static_cast<long>(2 * monos.size()) * static_cast<long>(2 * monos.size()) *
               w.degree() * 8;
  if (cells > memory_budget_cells())
    throw ResourceError("ansatz exceeds the WEBSYM_MEMORY_BUDGET cell budget");
  LinearSystem sys = build_system(w, monos);
  if (denominators) *denominators = sys.denominators;
  auto kernel = exact_nullspace(sys.rows, 2 * monos.size());
  std::vector<VectorField> fields;
  fields.reserve(kernel.size());
  for (const QVec& v : kernel) fields.push_back(field_from_vector(v, monos, w.coords()));
  // Mandatory soundness pass: every candidate must solve every equation.
  for (const VectorField& f : fields)
    if (!is_exact_symmetry(w, f))
      throw InternalError("solver produced a field that fails re-substitution");
  return fields;
}

QMat field_matrix(const std::vector<VectorField>& fields) {
  // Coefficient vectors over the union of monomials of (a1, a2).
  std::map<Mono, std::size_t, MonoLess> index1, index2;
  std::vector<std::pair<MPoly, MPoly>> polys;
  for (const VectorField& f : fields) {
    auto a1 = to_mpoly(f.a1);
    auto a2 = to_mpoly(f.a2);
    if (!a1 || !a2) throw NotRationalError("span test requires polynomial fields");
    for (const auto& [m, c] : a1->terms()) index1.try_emplace(m, 0);
    for (const auto& [m, c] : a2->terms()) index2.try_emplace(m, 0);
    polys.emplace_back(std::move(*a1), std::move(*a2));
  }
  std::size_t next = 0;
  for (auto& [m, idx] : index1) idx = next++;
  for (auto& [m, idx] : index2) idx = next++;
  QMat rows;
  for (const auto& [a1, a2] : polys) {
    QVec row(next, Rat(0));
    for (const auto& [m, c] : a1.terms()) row[index1[m]] = c;
    for (const auto& [m, c] : a2.terms()) row[index2[m]] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t ansatz_size(int degree_bound) {
  return static_cast<std::size_t>((degree_bound + 1) * (degree_bound + 2) / 2);
}

bool span_equal(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  if (a.empty() && b.empty()) return true;
  std::vector<VectorField> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  QMat ma = field_matrix(a);
  QMat mb = field_matrix(b);
  QMat mj = field_matrix(joint);
  int rj = rank(mj);
  return rank(ma) == rj && rank(mb) == rj;
}

bool in_span(const VectorField& f, const std::vector<VectorField>& basis) {
  std::vector<VectorField> joint = basis;
  joint.push_back(f);
  return rank(field_matrix(joint)) == rank(field_matrix(basis));
}

SymmetryBasis solve_polynomial(const Web& w, int degree_bound) {
  SymmetryBasis out;
  out.degree_bound = degree_bound;
  out.fields = solve_raw(w, degree_bound, &out.cleared_denominators);
  auto next = solve_raw(w, degree_bound + 1, nullptr);
  out.stabilized = span_equal(out.fields, next);
  return out;
}

ScanReport stabilization_scan(const Web& w, int degree_max) {
  ScanReport report;
  std::vector<std::vector<VectorField>> spans;
  for (int n = 0; n <= degree_max; ++n) {
    spans.push_back(solve_raw(w, n, nullptr));
    report.dimensions.push_back(static_cast<int>(spans.back().size()));
  }
  for (int n = 0; n + 1 <= degree_max; ++n) {
    if (span_equal(spans[static_cast<std::size_t>(n)], spans[static_cast<std::size_t>(n) + 1])) {
      report.stabilized_at = n;
      break;
    }
  }
  return report;
}

}  // namespace websym
