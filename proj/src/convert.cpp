#include "websym/convert.hpp"

#include "websym/error.hpp"

namespace websym {

std::optional<RatFunc> to_ratfunc(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return RatFunc(e.value());
    case Expr::Kind::VarRef:
      return RatFunc::variable(e.var());
    case Expr::Kind::Sum: {
      RatFunc s;
      for (const Expr& k : e.children()) {
        auto r = to_ratfunc(k);
        if (!r) return std::nullopt;
        s = s + *r;
      }
      return s;
    }
    case Expr::Kind::Prod: {
      RatFunc p{Rat(1)};
      for (const Expr& k : e.children()) {
        auto r = to_ratfunc(k);
        if (!r) return std::nullopt;
        p = p * *r;
      }
      return p;
    }
    case Expr::Kind::Pow: {
      if (!is_integer(e.exponent())) return std::nullopt;
      auto base = to_ratfunc(e.child());
      if (!base) return std::nullopt;
      return base->pow(e.exponent().get_num().get_si());
    }
    case Expr::Kind::Ln:
    case Expr::Kind::Exp:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<MPoly> to_mpoly(const Expr& e) {
  auto r = to_ratfunc(e);
  if (!r || !r->is_polynomial()) return std::nullopt;
  return r->num();
}

}  // namespace websym
