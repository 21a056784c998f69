#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "websym/determining.hpp"

namespace websym {

/// Deterministic sample plan: points drawn uniformly from [lo, hi]^2 with a
/// fixed seed, rejecting points on or near the singular locus (reduced
/// discriminant below the floor, slope poles, ln / fractional-power branch
/// violations of any involved expression). Reproducible from the seed.
struct PlanConfig {
  int count = 64;
  std::uint64_t seed = 0x00d7a9b5;
  double lo = 0.5;
  double hi = 2.5;
  double discriminant_floor = 1e-6;
  int max_attempts = 100000;
};

struct SamplePlan {
  std::vector<std::array<double, 2>> points;
  std::uint64_t seed = 0;
};

/// Builds the plan for a web and the fields to be tested on it. Throws
/// EmptyPlanError when the exclusions leave fewer than `count` points.
SamplePlan make_plan(const Web& w, const std::vector<VectorField>& fields,
                     const PlanConfig& cfg = {});

struct LeafWorst {
  int leaf = 0;
  double value = 0.0;
  std::array<double, 2> point{0.0, 0.0};
};

struct Residual {
  double max_abs = 0.0;
  std::vector<LeafWorst> per_leaf;
};

/// Max determining-equation residual of X over the plan. Slope-form webs
/// evaluate the equation directly; coefficient-form webs take the leaf
/// slopes as numeric roots of P_F with implicit-differentiation slopes;
/// foliation-form webs (including vertical leaves) use the equivalent
/// criterion d(X(F)) ^ dF = 0 normalized by |grad F|^2.
Residual residual(const Web& w, const VectorField& x, const SamplePlan& plan);

struct Certificate {
  bool pass = false;
  double tol = 0.0;
  Residual details;
};

/// residual() against the default plan; pass iff max < tol.
Certificate verify_certificate(const Web& w, const VectorField& x, double tol = 1e-8);

/// Numeric counterpart of the reduced-discriminant cofactor identity:
/// max over the plan of |X(D) - K D| / (1 + |K D|) with D = prod (pi-pj)^2
/// and K = 2 sum lambda_{i,j}, slopes taken numerically.
double discriminant_cofactor_residual(const Web& w, const VectorField& x,
                                      const SamplePlan& plan);

/// Roots of a complex polynomial (leading coefficient first) by the
/// Durand-Kerner iteration, sorted by (re, im).
std::vector<Complex> poly_roots(std::vector<Complex> coeffs_desc);

}  // namespace websym
