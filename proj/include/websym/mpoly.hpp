#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "websym/expr.hpp"
#include "websym/rational.hpp"

namespace websym {

/// Exponent vector over the fixed variable universe {x, y, z, u, v}.
struct Mono {
  std::array<std::int32_t, kVarCount> e{};

  int deg() const;
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  bool divisible_by(const Mono& m) const;
  Mono operator*(const Mono& m) const;
  /// Componentwise difference; requires divisible_by(m).
  Mono operator/(const Mono& m) const;
  bool operator==(const Mono& m) const { return e == m.e; }
};

/// Graded-lexicographic order: total degree first, ties broken on the
/// exponents of the larger variables (v down to x).
bool grlex_less(const Mono& a, const Mono& b);

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return grlex_less(a, b); }
};

/// Sparse multivariate polynomial over Q. No zero coefficients are stored;
/// the zero polynomial has an empty term map. Term order is graded-lex, so
/// degree, leading term and rendering are deterministic.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Rat c);
  explicit MPoly(long c) : MPoly(Rat(c)) {}
  static MPoly variable(Var v, int power = 1);
  static MPoly monomial(Mono m, Rat c);

  const std::map<Mono, Rat, MonoLess>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value when is_constant()).
  Rat constant_value() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(Var v) const;
  Mono leading_mono() const;     // requires nonzero
  const Rat& leading_coeff() const;  // requires nonzero
  unsigned var_mask() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator*(const Rat& c) const;
  MPoly pow(unsigned n) const;
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly diff(Var v) const;
  /// Substitutes an exact rational for one variable.
  MPoly subst(Var v, const Rat& value) const;
  /// Full evaluation; every variable occurring must be bound in `at`.
  Rat eval(const std::map<Var, Rat>& at) const;
  Complex eval_complex(const Point& at) const;

  /// Coefficients with respect to v, ascending from degree 0.
  std::vector<MPoly> coeffs_in(Var v) const;
  static MPoly from_coeffs_in(Var v, const std::vector<MPoly>& ascending);

  Expr to_expr() const;
  /// Deterministic text form, leading term first (e.g. "-27*x^2*y^2").
  std::string render() const;

 private:
  std::map<Mono, Rat, MonoLess> t_;
  void add_term(const Mono& m, const Rat& c);
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

/// Exact division test: returns q with f == q*g, or nullopt. g must be
/// nonzero. divides(g, 0) == 0.
std::optional<MPoly> divides(const MPoly& g, const MPoly& f);

/// Integer-primitive normalization: poly == content * primitive where
/// primitive has coprime integer coefficients and positive leading
/// coefficient. The zero polynomial has content 0 and primitive 0.
struct ZNormalized {
  Rat content;
  MPoly primitive;
};
ZNormalized z_normalize(const MPoly& p);

/// GCD over Q[x..v], returned integer-primitive with positive leading
/// coefficient (primitive pseudo-remainder sequences).
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);

}  // namespace websym
