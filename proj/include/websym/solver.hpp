#pragma once

#include <vector>

#include "websym/determining.hpp"
#include "websym/linalg.hpp"

namespace websym {

/// Basis of the polynomial symmetries of total degree <= degree_bound,
/// found by exact linear algebra. Every returned field is re-substituted
/// into every determining equation (exact zero) before being reported.
struct SymmetryBasis {
  std::vector<VectorField> fields;
  int degree_bound = 0;
  /// Degrees N and N+1 span the same space.
  bool stabilized = false;
  /// Denominators cleared per leaf; the equivalence with the raw equations
  /// holds off their zero loci.
  std::vector<MPoly> cleared_denominators;
};

/// Dimension of the space of unknown ansatz coefficients for degree N.
std::size_t ansatz_size(int degree_bound);

SymmetryBasis solve_polynomial(const Web& w, int degree_bound);

struct ScanReport {
  std::vector<int> dimensions;  // N = 0 .. Nmax
  int stabilized_at = -1;       // first N with span(N) == span(N+1), -1 if none
};

ScanReport stabilization_scan(const Web& w, int degree_max);

/// Exact span equality of two polynomial field families (same coordinates).
bool span_equal(const std::vector<VectorField>& a, const std::vector<VectorField>& b);
bool in_span(const VectorField& f, const std::vector<VectorField>& basis);

}  // namespace websym
