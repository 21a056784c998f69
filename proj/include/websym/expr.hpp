#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "websym/error.hpp"
#include "websym/rational.hpp"

namespace websym {

/// The fixed variable universe, ordered x < y < z < u < v. z is reserved for
/// the fiber variable y' of presentation polynomials; webs live either in
/// (x,y) or in (u,v).
enum class Var : int { x = 0, y = 1, z = 2, u = 3, v = 4 };

inline constexpr int kVarCount = 5;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Immutable expression tree over Q with +, *, rational powers, ln and exp.
///
/// Every Expr is canonical by construction: sums and products are flattened
/// and sorted under a total node order, like terms and like bases are merged
/// with exact rational coefficients/exponents, zero summands and unit factors
/// are elided, and constant subexpressions fold. Two expressions that
/// canonicalize to the same tree compare equal with operator==.
class Expr {
 public:
  enum class Kind { Const, VarRef, Pow, Ln, Exp, Prod, Sum };

  /// Zero.
  Expr();

  static Expr constant(Rat value);
  static Expr constant(long num, long den = 1);
  static Expr variable(Var v);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  /// base^exponent with an exact rational exponent.
  static Expr power(Expr base, Rat exponent);
  static Expr ln(Expr arg);
  static Expr exp(Expr arg);

  Kind kind() const;
  /// Const only.
  const Rat& value() const;
  /// VarRef only.
  Var var() const;
  /// Pow only.
  const Rat& exponent() const;
  /// Pow / Ln / Exp child.
  const Expr& child() const;
  /// Sum / Prod children (also exposes the single child of Pow/Ln/Exp).
  const std::vector<Expr>& children() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const { return kind() == Kind::Const; }

  /// Bitmask of variables occurring in the tree (bit i = Var(i)).
  unsigned var_mask() const;

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }

  /// Total order used for canonical child ordering and map keys.
  friend int compare(const Expr& a, const Expr& b);

 private:
  struct Node;
  std::shared_ptr<const Node> n_;
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Expr raw(Node&& n);
};

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);

/// Exact partial derivative; total on Expr.
Expr diff(const Expr& e, Var v);

/// Substitutes expressions for variables (simultaneously), recanonicalizing.
Expr subst(const Expr& e, const std::map<Var, Expr>& replacements);

using Complex = std::complex<double>;
using Point = std::map<Var, Complex>;

/// IEEE double-complex evaluation with principal branches for ln and t^q.
/// Throws EvalError / BranchCutError / PoleError.
Complex eval_complex(const Expr& e, const Point& at);

/// Renders parseable text; stable across runs.
std::string render(const Expr& e);

/// Parses the documented grammar (see docs/grammar.md). Throws ParseError.
/// '^' exponents must be rational literals.
Expr parse_expr(std::string_view text);

/// Rebuilds the tree bottom-up through the canonical constructors.
/// canonicalized_copy(e) == e for every e (idempotence).
Expr canonicalized_copy(const Expr& e);

/// Strips multiplicative factors common to every summand of num and den and
/// returns num/den. This is what lets exp/ln factors cancel out of slope
/// quotients -dF/dx / dF/dy before rational-function conversion.
Expr simplified_quotient(const Expr& num, const Expr& den);

}  // namespace websym
