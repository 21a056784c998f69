#pragma once

#include <functional>
#include <string>
#include <vector>

#include "websym/lie.hpp"
#include "websym/numverify.hpp"
#include "websym/solver.hpp"

namespace websym {

enum class VerifyMode { exact, numeric };

/// One replayable worked example. Exact entries run the polynomial solver
/// and compare spans; numeric entries verify the listed generators by
/// residual. Infinite-dimensional entries pin a stabilization-scan profile
/// and verify sample members instead.
struct CorpusEntry {
  std::string name;
  std::string note;  // human label / known caveats
  std::function<Web()> make_web;
  VerifyMode mode = VerifyMode::exact;
  int solve_degree = 3;
  /// -1 means infinite-dimensional (1- and 2-webs).
  int expected_dimension = 0;
  /// Exact mode: the span the solver must reproduce.
  std::vector<VectorField> expected_basis;
  /// Extra generators outside the polynomial class, verified numerically.
  std::vector<VectorField> numeric_generators;
  /// Exact-mode entries whose full algebra needs a non-polynomial generator
  /// (the polynomial solve is then a strict subalgebra).
  bool nonpolynomial_completion = false;
  /// Infinite-dimensional entries: expected scan dimensions for N = 0..3.
  std::vector<int> expected_scan_dimensions;
  /// Sample members that must satisfy the determining equations exactly.
  std::vector<VectorField> sample_members;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

struct EntryResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> failures;
  int dimension = -2;           // polynomial solve result, when run
  double max_residual = 0.0;    // numeric verifications
  bool closed = false;          // closure of the verified generator set
  bool discriminant_identity = false;
  bool darboux_identity = false;
  double elapsed_seconds = 0.0;
};

/// Replays one entry: solve/span checks, numeric certificates, closure,
/// the discriminant product identity and the Darboux cofactor identity.
EntryResult run_entry(const CorpusEntry& e);

}  // namespace websym
