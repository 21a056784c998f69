#pragma once

#include <optional>
#include <string>

#include "websym/mpoly.hpp"

namespace websym {

/// Quotient of two MPoly in lowest terms. The denominator is nonzero,
/// integer-primitive and has positive leading coefficient under graded-lex;
/// rational content lives in the numerator. This representation is canonical,
/// so operator== is plain structural equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  explicit RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit RatFunc(MPoly p) : num_(std::move(p)), den_(Rat(1)) {}
  RatFunc(MPoly num, MPoly den);
  static RatFunc variable(Var v) { return RatFunc(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MPoly(Rat(1)); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }
  unsigned var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws PoleError on /0
  RatFunc pow(long e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc diff(Var v) const;
  /// Exact evaluation; throws PoleError when the denominator vanishes.
  Rat eval(const std::map<Var, Rat>& at) const;
  Complex eval_complex(const Point& at) const;

  Expr to_expr() const;
  std::string render() const;

 private:
  MPoly num_, den_;
  void normalize();
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c) * f; }

}  // namespace websym
