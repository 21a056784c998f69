#include "websym/ratfunc.hpp"

#include "websym/error.hpp"

namespace websym {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PoleError("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!(g == MPoly(Rat(1)))) {
    num_ = *divides(g, num_);
    den_ = *divides(g, den_);
  }
  ZNormalized dz = z_normalize(den_);
  den_ = dz.primitive;
  num_ = num_ * (Rat(1) / dz.content);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw PoleError("division by the zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Rat(1));
  bool inv = e < 0;
  unsigned n = static_cast<unsigned>(inv ? -e : e);
  if (inv && is_zero()) throw PoleError("zero raised to a negative power");
  RatFunc r(num_.pow(n), den_.pow(n));
  return inv ? RatFunc(Rat(1)) / r : r;
}

RatFunc RatFunc::diff(Var v) const {
  // (n/d)' = (n'd - nd') / d^2
  return RatFunc(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

Rat RatFunc::eval(const std::map<Var, Rat>& at) const {
  Rat d = den_.eval(at);
  if (d == 0) throw PoleError("evaluation at a pole");
  return num_.eval(at) / d;
}

Complex RatFunc::eval_complex(const Point& at) const {
  Complex d = den_.eval_complex(at);
  if (d == Complex(0.0, 0.0)) throw PoleError("evaluation at a pole");
  return num_.eval_complex(at) / d;
}

Expr RatFunc::to_expr() const {
  if (is_polynomial()) return num_.to_expr();
  return num_.to_expr() / den_.to_expr();
}

std::string RatFunc::render() const {
  if (is_polynomial()) return num_.render();
  std::string n = num_.render();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.render();
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace websym
