#include "websym/corpus.hpp"

#include <chrono>

#include "websym/error.hpp"

namespace websym {

namespace {

Expr E(const std::string& s) { return parse_expr(s); }

VectorField fxy(const std::string& a1, const std::string& a2) {
  return parse_field(a1, a2, CoordPair::xy);
}

VectorField fuv(const std::string& a1, const std::string& a2) {
  return parse_field(a1, a2, CoordPair::uv);
}

MPoly xy_monomial(int i, int j) {
  return MPoly::variable(Var::x, i) * MPoly::variable(Var::y, j);
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;

  {
    CorpusEntry e;
    e.name = "one_web";
    e.note = "single foliation y' = 0; infinite-dimensional algebra";
    e.make_web = [] { return Web::from_slopes({E("0")}, CoordPair::xy, "one_web"); };
    e.expected_dimension = -1;
    e.expected_scan_dimensions = {2, 5, 9, 14};
    e.sample_members = {fxy("x^2*y", "y^2"), fxy("x", "0"), fxy("0", "y")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "two_web";
    e.note = "two transverse pencils, slopes 0 and 1; infinite-dimensional";
    e.make_web = [] {
      return Web::from_slopes({E("0"), E("1")}, CoordPair::xy, "two_web");
    };
    e.expected_dimension = -1;
    e.expected_scan_dimensions = {2, 4, 6, 8};
    e.sample_members = {fxy("y", "y"), fxy("x", "y"), fxy("1", "0")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "parallel";
    e.note = "three parallel pencils, slopes 0, 1, -1";
    e.make_web = [] {
      return Web::from_slopes({E("0"), E("1"), E("-1")}, CoordPair::xy, "parallel");
    };
    e.solve_degree = 3;
    e.expected_dimension = 3;
    e.expected_basis = {fxy("1", "0"), fxy("0", "1"), fxy("x", "y")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "cartan";
    e.note = "Cartan 3-web (z^2-1)(z-u(x)) instantiated at u(x) = x";
    e.make_web = [] {
      return Web::from_slopes({E("1"), E("-1"), E("x")}, CoordPair::xy, "cartan");
    };
    e.solve_degree = 3;
    e.expected_dimension = 1;
    e.expected_basis = {fxy("0", "1")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "muzsnay";
    e.note = "Muzsnay 3-web in prepared (u,v) coordinates";
    e.make_web = [] {
      return Web::from_slopes({E("1"), E("-1"), E("(u-2)/u")}, CoordPair::uv, "muzsnay");
    };
    e.solve_degree = 2;
    e.expected_dimension = 1;
    e.expected_basis = {fuv("0", "1")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "clairaut";
    e.note = "Clairaut 3-web, slopes 1, -1, y/x (the second slope is -1: "
             "+1 would break general position)";
    e.make_web = [] {
      return Web::from_slopes({E("1"), E("-1"), E("y/x")}, CoordPair::xy, "clairaut");
    };
    e.solve_degree = 1;
    e.expected_dimension = 2;
    e.expected_basis = {fxy("x", "y"), fxy("y", "x")};
    e.numeric_generators = {fxy("x*ln(x^2-y^2) + y*ln((x+y)/(x-y))",
                                "y*ln(x^2-y^2) + x*ln((x+y)/(x-y))")};
    e.nonpolynomial_completion = true;
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "zariski_1_1";
    e.note = "Zariski web z^3 + x*y (m = n = 1)";
    e.make_web = [] {
      return Web::from_coefficients(
          {MPoly(Rat(1)), MPoly(), MPoly(), xy_monomial(1, 1)}, CoordPair::xy,
          "zariski_1_1");
    };
    e.mode = VerifyMode::numeric;
    e.expected_dimension = 3;
    e.numeric_generators = {fxy("x^(-1/3)", "0"), fxy("0", "y^(1/3)"),
                            fxy("2*x", "4*y")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "zariski_3_3";
    e.note = "Zariski web z^3 + x^3*y^3 (the n = 3 branch with its y*ln(y) generator)";
    e.make_web = [] {
      return Web::from_coefficients(
          {MPoly(Rat(1)), MPoly(), MPoly(), xy_monomial(3, 3)}, CoordPair::xy,
          "zariski_3_3");
    };
    e.mode = VerifyMode::numeric;
    e.expected_dimension = 3;
    e.numeric_generators = {fxy("1/x", "0"), fxy("0", "y"), fxy("x/2", "y*ln(y)")};
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "hexagonal";
    e.note = "standard hexagonal 3-web in prepared coordinates, slopes -1, 1, 0";
    e.make_web = [] {
      return Web::from_slopes({E("-1"), E("1"), E("0")}, CoordPair::xy, "hexagonal");
    };
    e.solve_degree = 3;
    e.expected_dimension = 3;
    e.expected_basis = {fxy("1", "0"), fxy("0", "1"), fxy("x", "y")};
    c.push_back(std::move(e));
  }
  return c;
}

bool discriminant_product_identity(const Web& w) {
  // Delta == a0^(2d-2) * prod (p_i - p_j)^2 over the rational-function field.
  if (!w.rational_slopes() || w.degree() < 2) return true;
  RatFunc lhs{w.discriminant()};
  RatFunc rhs = RatFunc(w.coefficients().front()).pow(2 * w.degree() - 2) *
                w.reduced_discriminant();
  return lhs == rhs;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  throw ValidationError("no corpus entry named '" + name + "'");
}

EntryResult run_entry(const CorpusEntry& e) {
  auto t0 = std::chrono::steady_clock::now();
  EntryResult r;
  r.name = e.name;
  auto fail = [&](const std::string& msg) { r.failures.push_back(msg); };
  try {
    Web w = e.make_web();

    if (e.expected_dimension == -1) {
      ScanReport scan = stabilization_scan(w, 3);
      if (scan.dimensions != e.expected_scan_dimensions)
        fail("stabilization scan dimensions differ from the pinned profile");
      if (scan.stabilized_at != -1)
        fail("scan unexpectedly stabilized for an infinite-dimensional algebra");
      for (const VectorField& f : e.sample_members)
        if (!is_exact_symmetry(w, f)) fail("sample member fails the determining equations");
    } else if (e.mode == VerifyMode::exact) {
      SymmetryBasis basis = solve_polynomial(w, e.solve_degree);
      r.dimension = static_cast<int>(basis.fields.size());
      if (r.dimension != e.expected_dimension)
        fail("polynomial solve dimension " + std::to_string(r.dimension) +
             " != expected " + std::to_string(e.expected_dimension));
      else if (!span_equal(basis.fields, e.expected_basis))
        fail("solver span differs from the expected basis");
      AlgebraReport alg = closure_check(basis.fields);
      r.closed = alg.closed;
      if (!alg.closed || !structure_constants_consistent(alg))
        fail("polynomial basis is not a consistent Lie algebra");
    } else {
      r.dimension = static_cast<int>(e.numeric_generators.size());
    }

    for (const VectorField& g : e.numeric_generators) {
      Certificate cert = verify_certificate(w, g, 1e-8);
      r.max_residual = std::max(r.max_residual, cert.details.max_abs);
      if (!cert.pass) fail("numeric generator failed verification");
    }
    if (!e.numeric_generators.empty()) {
      std::vector<VectorField> all = e.expected_basis;
      all.insert(all.end(), e.numeric_generators.begin(), e.numeric_generators.end());
      AlgebraReport alg = closure_check(all);
      r.closed = alg.closed;
      if (!alg.closed) fail("full generator set is not closed under brackets");
    }

    r.discriminant_identity = discriminant_product_identity(w);
    if (!r.discriminant_identity) fail("discriminant product identity failed");

    // Darboux: X(Delta~) = (2 sum lambda) Delta~ for every verified symmetry.
    r.darboux_identity = true;
    if (w.rational_slopes()) {
      std::vector<VectorField> exact_fields = e.expected_basis;
      exact_fields.insert(exact_fields.end(), e.sample_members.begin(),
                          e.sample_members.end());
      for (const VectorField& f : exact_fields) {
        discriminant_cofactor(w, f);  // throws on identity failure
        if (f.is_polynomial()) {
          MPoly num = w.reduced_discriminant().num();
          if (!num.is_constant() && !der_membership(f, num)) {
            r.darboux_identity = false;
            fail("polynomial symmetry is not in Der of the reduced discriminant");
          }
        }
      }
    }
    for (const VectorField& g : e.numeric_generators) {
      SamplePlan plan = make_plan(w, {g});
      double dev = discriminant_cofactor_residual(w, g, plan);
      if (dev > 1e-8) {
        r.darboux_identity = false;
        fail("numeric Darboux cofactor identity above tolerance");
      }
    }
  } catch (const Error& err) {
    fail(std::string("exception: ") + err.what());
  }
  r.pass = r.failures.empty();
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace websym
