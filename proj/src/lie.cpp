#include "websym/lie.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "websym/detrand.hpp"
#include "websym/error.hpp"
#include "websym/linalg.hpp"

namespace websym {

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (x.coords != y.coords)
    throw ValidationError("bracket of fields in different coordinates");
  return VectorField{x.apply(y.a1) - y.apply(x.a1), x.apply(y.a2) - y.apply(x.a2),
                     x.coords};
}

namespace {

constexpr int kNumericPoints = 40;
constexpr double kNumericTol = 1e-8;

struct PolyCoords {
  std::map<Mono, std::size_t, MonoLess> idx1, idx2;
  std::size_t cols = 0;
};

void grow_coords(const VectorField& f, PolyCoords& pc) {
  auto a1 = to_mpoly(f.a1);
  auto a2 = to_mpoly(f.a2);
  if (!a1 || !a2) throw NotRationalError("exact span test requires polynomial fields");
  for (const auto& [m, c] : a1->terms()) pc.idx1.try_emplace(m, 0);
  for (const auto& [m, c] : a2->terms()) pc.idx2.try_emplace(m, 0);
}

QVec poly_vector(const VectorField& f, const PolyCoords& pc) {
  QVec v(pc.cols, Rat(0));
  auto a1 = to_mpoly(f.a1);
  auto a2 = to_mpoly(f.a2);
  for (const auto& [m, c] : a1->terms()) v[pc.idx1.at(m)] = c;
  for (const auto& [m, c] : a2->terms()) v[pc.idx2.at(m)] = c;
  return v;
}

bool all_polynomial(const std::vector<VectorField>& fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [](const VectorField& f) { return f.is_polynomial(); });
}

// Exact path: solve [basis] c = bracket on stacked coefficient vectors.
std::optional<QVec> exact_membership(const std::vector<VectorField>& basis,
                                     const VectorField& target) {
  PolyCoords pc;
  for (const VectorField& f : basis) grow_coords(f, pc);
  grow_coords(target, pc);
  std::size_t next = 0;
  for (auto& [m, i] : pc.idx1) i = next++;
  for (auto& [m, i] : pc.idx2) i = next++;
  pc.cols = next;
  QMat a(pc.cols, QVec(basis.size(), Rat(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    QVec col = poly_vector(basis[j], pc);
    for (std::size_t r = 0; r < pc.cols; ++r) a[r][j] = col[r];
  }
  return solve_linear(a, poly_vector(target, pc));
}

// Numeric path: least-squares fit of the bracket on the basis at sample
// points, with branch-aware rejection sampling.
struct NumericFit {
  std::vector<double> coeffs;
  double residual = 0.0;
  bool ok = false;
};

NumericFit numeric_membership(const std::vector<VectorField>& basis,
                              const VectorField& target) {
  CoordPair coords = basis.front().coords;
  DetRand rng(0x5ca1ab1e);
  std::vector<Point> pts;
  for (int attempt = 0; attempt < 4000 && static_cast<int>(pts.size()) < kNumericPoints;
       ++attempt) {
    Point at{{coord1(coords), Complex(rng.in(0.5, 2.5), 0.0)},
             {coord2(coords), Complex(rng.in(0.5, 2.5), 0.0)}};
    try {
      for (const VectorField& f : basis) {
        eval_complex(f.a1, at);
        eval_complex(f.a2, at);
      }
      eval_complex(target.a1, at);
      eval_complex(target.a2, at);
    } catch (const EvalError&) {
      continue;
    }
    pts.push_back(std::move(at));
  }
  NumericFit fit;
  if (pts.size() < basis.size()) return fit;
  // Real normal equations (all corpus evaluations here are real-valued).
  std::size_t n = basis.size();
  std::size_t rows = 2 * pts.size();
  std::vector<std::vector<double>> a(rows, std::vector<double>(n, 0.0));
  std::vector<double> b(rows, 0.0);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (std::size_t j = 0; j < n; ++j) {
      a[2 * p][j] = eval_complex(basis[j].a1, pts[p]).real();
      a[2 * p + 1][j] = eval_complex(basis[j].a2, pts[p]).real();
    }
    b[2 * p] = eval_complex(target.a1, pts[p]).real();
    b[2 * p + 1] = eval_complex(target.a2, pts[p]).real();
  }
  std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
  std::vector<double> atb(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < rows; ++r) ata[i][j] += a[r][i] * a[r][j];
    for (std::size_t r = 0; r < rows; ++r) atb[i] += a[r][i] * b[r];
  }
  // Gaussian elimination with partial pivoting.
  std::vector<double> c = atb;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(ata[i][k]) > std::abs(ata[piv][k])) piv = i;
    if (std::abs(ata[piv][k]) < 1e-14) return fit;
    std::swap(ata[k], ata[piv]);
    std::swap(c[k], c[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = ata[i][k] / ata[k][k];
      for (std::size_t j = k; j < n; ++j) ata[i][j] -= f * ata[k][j];
      c[i] -= f * c[k];
    }
  }
  fit.coeffs.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = c[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= ata[k][j] * fit.coeffs[j];
    fit.coeffs[k] = s / ata[k][k];
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    double s = -b[r];
    for (std::size_t j = 0; j < n; ++j) s += a[r][j] * fit.coeffs[j];
    worst = std::max(worst, std::abs(s));
  }
  fit.residual = worst;
  fit.ok = worst < kNumericTol;
  return fit;
}

// Snaps a double to a small rational (continued fractions, den <= 10^6).
Rat snap_rational(double x) {
  double target = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = target;
  for (int it = 0; it < 40; ++it) {
    long a = static_cast<long>(std::floor(v));
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > 1000000 || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - target) < 1e-9) break;
    double frac = v - static_cast<double>(a);
    if (std::abs(frac) < 1e-12) break;
    v = 1.0 / frac;
  }
  return rat(p1, q1);
}

}  // namespace

AlgebraReport closure_check(const std::vector<VectorField>& basis) {
  AlgebraReport rep;
  rep.basis = basis;
  rep.dimension = static_cast<int>(basis.size());
  if (basis.empty()) {
    rep.closed = true;
    return rep;
  }
  bool exact = all_polynomial(basis);
  rep.numeric = !exact;
  std::size_t n = basis.size();
  rep.structure.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
  rep.closed = true;
  for (std::size_t i = 0; i < n && rep.closed; ++i) {
    for (std::size_t j = i + 1; j < n && rep.closed; ++j) {
      VectorField br = bracket(basis[i], basis[j]);
      std::vector<Rat> coeffs(n, Rat(0));
      if (exact) {
        auto c = exact_membership(basis, br);
        if (!c) {
          rep.closed = false;
          rep.offending = {static_cast<int>(i), static_cast<int>(j)};
          break;
        }
        coeffs = *c;
      } else {
        NumericFit fit = numeric_membership(basis, br);
        rep.max_residual = std::max(rep.max_residual, fit.residual);
        if (!fit.ok) {
          rep.closed = false;
          rep.offending = {static_cast<int>(i), static_cast<int>(j)};
          break;
        }
        for (std::size_t k = 0; k < n; ++k) coeffs[k] = snap_rational(fit.coeffs[k]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        rep.structure[i][j][k] = coeffs[k];
        rep.structure[j][i][k] = -coeffs[k];
      }
    }
  }
  if (!rep.closed) rep.structure.clear();
  return rep;
}

bool structure_constants_consistent(const AlgebraReport& rep) {
  if (!rep.closed) return false;
  std::size_t n = rep.basis.size();
  const auto& c = rep.structure;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  // Jacobi: sum_m c^m_{jk} c^l_{im} + c^m_{ki} c^l_{jm} + c^m_{ij} c^l_{km} = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s(0);
          for (std::size_t m = 0; m < n; ++m)
            s += c[j][k][m] * c[i][m][l] + c[k][i][m] * c[j][m][l] +
                 c[i][j][m] * c[k][m][l];
          if (s != 0) return false;
        }
  return true;
}

}  // namespace websym
