#include "websym/linalg.hpp"

#include <algorithm>

#include "websym/error.hpp"

namespace websym {

namespace {

struct Echelon {
  // Integer row-echelon form (fraction-free) and the pivot column of each
  // of the first `pivots.size()` rows.
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivot_cols;
};

// Scales each row to coprime integers, then runs Bareiss one-step
// fraction-free elimination with row swaps.
Echelon echelon_form(const QMat& m, std::size_t ncols) {
  Echelon ech;
  for (const QVec& row : m) {
    Int den_lcm = 1;
    for (const Rat& q : row)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> irow(ncols, Int(0));
    for (std::size_t j = 0; j < row.size() && j < ncols; ++j)
      irow[j] = row[j].get_num() * (den_lcm / row[j].get_den());
    ech.rows.push_back(std::move(irow));
  }
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < ncols && r < ech.rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < ech.rows.size() && ech.rows[piv][col] == 0) ++piv;
    if (piv == ech.rows.size()) continue;
    std::swap(ech.rows[r], ech.rows[piv]);
    for (std::size_t i = r + 1; i < ech.rows.size(); ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Int t = ech.rows[r][col] * ech.rows[i][j] - ech.rows[i][col] * ech.rows[r][j];
        mpz_divexact(ech.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      ech.rows[i][col] = 0;
    }
    prev = ech.rows[r][col];
    ech.pivot_cols.push_back(col);
    ++r;
  }
  return ech;
}

}  // namespace

int rank(QMat m) {
  std::size_t ncols = 0;
  for (const QVec& row : m) ncols = std::max(ncols, row.size());
  if (ncols == 0) return 0;
  return static_cast<int>(echelon_form(m, ncols).pivot_cols.size());
}

std::vector<QVec> exact_nullspace(const QMat& m, std::size_t ncols) {
  Echelon ech = echelon_form(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(ncols, Rat(0));
    v[fc] = 1;
    // Back-substitute through the echelon rows, bottom-up.
    for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
      std::size_t pc = ech.pivot_cols[k];
      Rat s(0);
      for (std::size_t j = pc + 1; j < ncols; ++j) {
        if (ech.rows[k][j] == 0 || v[j] == 0) continue;
        s += Rat(ech.rows[k][j]) * v[j];
      }
      v[pc] = -s / Rat(ech.rows[k][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw ValidationError("solve_linear: size mismatch");
  std::size_t ncols = 0;
  for (const QVec& row : a) ncols = std::max(ncols, row.size());
  QMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(ncols, Rat(0));
    aug[i].push_back(b[i]);
  }
  Echelon ech = echelon_form(aug, ncols + 1);
  // Inconsistent iff some pivot lands in the augmented column.
  for (std::size_t c : ech.pivot_cols)
    if (c == ncols) return std::nullopt;
  QVec x(ncols, Rat(0));
  for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
    std::size_t pc = ech.pivot_cols[k];
    Rat s(0);
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (ech.rows[k][j] != 0 && x[j] != 0) s += Rat(ech.rows[k][j]) * x[j];
    x[pc] = (Rat(ech.rows[k][ncols]) - s) / Rat(ech.rows[k][pc]);
  }
  return x;
}

MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("bareiss_det: matrix not square");
  if (n == 0) return MPoly(Rat(1));
  MPoly prev{Rat(1)};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return MPoly();  // singular
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divides(prev, t);
        if (!q) throw InternalError("Bareiss step produced a non-exact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace websym
