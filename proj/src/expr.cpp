#include "websym/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace websym {

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && base == 0) throw PoleError("0 raised to a negative power");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
  Rat q = inv ? Rat(den, num) : Rat(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rat> exact_root(const Rat& base, unsigned long n) {
  if (sgn(base) < 0) return std::nullopt;
  Int rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), base.get_num().get_mpz_t(), n);
  if (!exact_n) return std::nullopt;
  int exact_d = mpz_root(rd.get_mpz_t(), base.get_den().get_mpz_t(), n);
  if (!exact_d) return std::nullopt;
  Rat q(rn, rd);
  q.canonicalize();
  return q;
}

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_class(string) accepts whitespace and bases we do not want; validate.
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  Rat q(s);
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

namespace {
constexpr const char* kVarNames[kVarCount] = {"x", "y", "z", "u", "v"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

struct Expr::Node {
  Kind kind;
  Rat num;  // Const value, or Pow exponent
  Var var{Var::x};
  std::vector<Expr> kids;
};

namespace {

int rank(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Const: return 0;
    case Expr::Kind::VarRef: return 1;
    case Expr::Kind::Pow: return 2;
    case Expr::Kind::Ln: return 3;
    case Expr::Kind::Exp: return 4;
    case Expr::Kind::Prod: return 5;
    case Expr::Kind::Sum: return 6;
  }
  return 7;
}

}  // namespace

Expr::Expr() : Expr(constant(Rat(0))) {}

Expr Expr::raw(Node&& n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr Expr::constant(Rat value) {
  value.canonicalize();
  Node n{Kind::Const, std::move(value), Var::x, {}};
  return raw(std::move(n));
}

Expr Expr::constant(long num, long den) { return constant(rat(num, den)); }

Expr Expr::variable(Var v) {
  Node n{Kind::VarRef, Rat(0), v, {}};
  return raw(std::move(n));
}

Expr::Kind Expr::kind() const { return n_->kind; }
const Rat& Expr::value() const { return n_->num; }
Var Expr::var() const { return n_->var; }
const Rat& Expr::exponent() const { return n_->num; }
const Expr& Expr::child() const { return n_->kids.front(); }
const std::vector<Expr>& Expr::children() const { return n_->kids; }

bool Expr::is_zero() const { return kind() == Kind::Const && n_->num == 0; }
bool Expr::is_one() const { return kind() == Kind::Const && n_->num == 1; }

bool Expr::operator==(const Expr& o) const { return compare(*this, o) == 0; }

int compare(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return 0;
  int ra = rank(a.kind()), rb = rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Expr::Kind::Const: {
      int c = cmp(a.value(), b.value());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Expr::Kind::VarRef: {
      int ia = static_cast<int>(a.var()), ib = static_cast<int>(b.var());
      return ia < ib ? -1 : ia > ib ? 1 : 0;
    }
    case Expr::Kind::Pow: {
      int c = compare(a.child(), b.child());
      if (c != 0) return c;
      int e = cmp(a.exponent(), b.exponent());
      return e < 0 ? -1 : e > 0 ? 1 : 0;
    }
    case Expr::Kind::Ln:
    case Expr::Kind::Exp:
      return compare(a.child(), b.child());
    case Expr::Kind::Prod:
    case Expr::Kind::Sum: {
      const auto& ka = a.children();
      const auto& kb = b.children();
      std::size_t n = std::min(ka.size(), kb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(ka[i], kb[i]);
        if (c != 0) return c;
      }
      if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

unsigned Expr::var_mask() const {
  switch (kind()) {
    case Kind::Const: return 0;
    case Kind::VarRef: return 1u << static_cast<int>(var());
    default: {
      unsigned m = 0;
      for (const Expr& k : children()) m |= k.var_mask();
      return m;
    }
  }
}

namespace {

const Expr& one_expr() {
  static const Expr e = Expr::constant(1);
  return e;
}

// Splits a canonical term as coefficient * core, core carrying no rational
// coefficient of its own.
std::pair<Rat, Expr> term_split(const Expr& t) {
  if (t.kind() == Expr::Kind::Const) return {t.value(), one_expr()};
  if (t.kind() == Expr::Kind::Prod) {
    const auto& kids = t.children();
    if (kids.front().kind() == Expr::Kind::Const) {
      Rat c = kids.front().value();
      if (kids.size() == 2) return {c, kids[1]};
      std::vector<Expr> rest(kids.begin() + 1, kids.end());
      return {c, Expr::product(std::move(rest))};
    }
  }
  return {Rat(1), t};
}

// Splits a canonical factor as base^exponent.
std::pair<Expr, Rat> factor_split(const Expr& f) {
  if (f.kind() == Expr::Kind::Pow) return {f.child(), f.exponent()};
  return {f, Rat(1)};
}

}  // namespace

Expr Expr::sum(std::vector<Expr> terms) {
  std::map<Expr, Rat, ExprLess> acc;
  std::vector<Expr> queue = std::move(terms);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Expr t = queue[qi];
    if (t.kind() == Kind::Sum) {
      for (const Expr& k : t.children()) queue.push_back(k);
      continue;
    }
    auto [c, core] = term_split(t);
    if (c == 0) continue;
    acc[core] += c;
  }
  std::vector<Expr> out;
  out.reserve(acc.size());
  for (const auto& [core, c] : acc) {
    if (c == 0) continue;
    if (core.is_one()) {
      out.push_back(constant(c));
    } else if (c == 1) {
      out.push_back(core);
    } else {
      out.push_back(product({constant(c), core}));
    }
  }
  if (out.empty()) return constant(Rat(0));
  if (out.size() == 1) return out.front();
  std::sort(out.begin(), out.end(), ExprLess{});
  Node n{Kind::Sum, Rat(0), Var::x, std::move(out)};
  return raw(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  Rat coeff(1);
  std::map<Expr, Rat, ExprLess> powers;
  std::vector<Expr> queue = std::move(factors);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Expr f = queue[qi];
    switch (f.kind()) {
      case Kind::Prod:
        for (const Expr& k : f.children()) queue.push_back(k);
        break;
      case Kind::Const:
        coeff *= f.value();
        break;
      default: {
        auto [base, e] = factor_split(f);
        powers[base] += e;
        break;
      }
    }
  }
  if (coeff == 0) return constant(Rat(0));
  std::vector<Expr> out;
  bool reprocess = false;
  for (const auto& [base, e] : powers) {
    if (e == 0) continue;
    Expr pw = power(base, e);
    if (pw.kind() == Kind::Const) {
      coeff *= pw.value();
      if (coeff == 0) return constant(Rat(0));
    } else if (pw.kind() == Kind::Prod) {
      // Exponent merging can re-expose a product (e.g. (x*y)^2 factors).
      out.push_back(pw);
      reprocess = true;
    } else {
      out.push_back(pw);
    }
  }
  if (reprocess) {
    out.push_back(constant(coeff));
    return product(std::move(out));
  }
  if (out.empty()) return constant(coeff);
  std::sort(out.begin(), out.end(), ExprLess{});
  if (coeff == 1 && out.size() == 1) return out.front();
  if (coeff != 1) out.insert(out.begin(), constant(coeff));
  if (out.size() == 1) return out.front();
  Node n{Kind::Prod, Rat(0), Var::x, std::move(out)};
  return raw(std::move(n));
}

Expr Expr::power(Expr base, Rat exponent) {
  exponent.canonicalize();
  if (exponent == 0) return constant(1);
  if (exponent == 1) return base;
  if (base.kind() == Kind::Const) {
    const Rat& b = base.value();
    if (b == 0) {
      if (sgn(exponent) > 0) return constant(Rat(0));
      // 0^negative kept as a node; evaluation reports the pole.
    } else if (b == 1) {
      return constant(1);
    } else if (is_integer(exponent)) {
      return constant(pow_rat(b, exponent.get_num().get_si()));
    } else if (sgn(b) > 0) {
      unsigned long den = exponent.get_den().get_ui();
      if (auto root = exact_root(b, den)) {
        return constant(pow_rat(*root, exponent.get_num().get_si()));
      }
    }
  } else if (base.kind() == Kind::Pow && is_integer(exponent)) {
    Rat inner = base.exponent();
    return power(base.child(), inner * exponent);
  } else if (base.kind() == Kind::Prod && is_integer(exponent)) {
    std::vector<Expr> parts;
    parts.reserve(base.children().size());
    for (const Expr& k : base.children()) parts.push_back(power(k, exponent));
    return product(std::move(parts));
  }
  Node n{Kind::Pow, std::move(exponent), Var::x, {std::move(base)}};
  return raw(std::move(n));
}

Expr Expr::ln(Expr arg) {
  if (arg.is_one()) return constant(Rat(0));
  Node n{Kind::Ln, Rat(0), Var::x, {std::move(arg)}};
  return raw(std::move(n));
}

Expr Expr::exp(Expr arg) {
  if (arg.is_zero()) return constant(1);
  if (arg.kind() == Kind::Ln) return arg.child();
  Node n{Kind::Exp, Rat(0), Var::x, {std::move(arg)}};
  return raw(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) {
  return Expr::sum({a, Expr::product({Expr::constant(-1), b})});
}
Expr operator-(const Expr& a) { return Expr::product({Expr::constant(-1), a}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  return Expr::product({a, Expr::power(b, rat(-1))});
}

Expr diff(const Expr& e, Var v) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return Expr::constant(0);
    case Expr::Kind::VarRef:
      return Expr::constant(e.var() == v ? 1 : 0);
    case Expr::Kind::Sum: {
      std::vector<Expr> parts;
      parts.reserve(e.children().size());
      for (const Expr& k : e.children()) parts.push_back(diff(k, v));
      return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Prod: {
      std::vector<Expr> parts;
      const auto& kids = e.children();
      for (std::size_t i = 0; i < kids.size(); ++i) {
        std::vector<Expr> fs = kids;
        fs[i] = diff(kids[i], v);
        parts.push_back(Expr::product(std::move(fs)));
      }
      return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Pow: {
      // d(t^q) = q t^(q-1) t'
      const Expr& t = e.child();
      Rat q = e.exponent();
      return Expr::product({Expr::constant(q), Expr::power(t, q - 1), diff(t, v)});
    }
    case Expr::Kind::Ln:
      return diff(e.child(), v) / e.child();
    case Expr::Kind::Exp:
      return Expr::product({e, diff(e.child(), v)});
  }
  return Expr::constant(0);
}

Expr subst(const Expr& e, const std::map<Var, Expr>& replacements) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return e;
    case Expr::Kind::VarRef: {
      auto it = replacements.find(e.var());
      return it == replacements.end() ? e : it->second;
    }
    case Expr::Kind::Sum:
    case Expr::Kind::Prod: {
      std::vector<Expr> kids;
      kids.reserve(e.children().size());
      for (const Expr& k : e.children()) kids.push_back(subst(k, replacements));
      return e.kind() == Expr::Kind::Sum ? Expr::sum(std::move(kids))
                                         : Expr::product(std::move(kids));
    }
    case Expr::Kind::Pow:
      return Expr::power(subst(e.child(), replacements), e.exponent());
    case Expr::Kind::Ln:
      return Expr::ln(subst(e.child(), replacements));
    case Expr::Kind::Exp:
      return Expr::exp(subst(e.child(), replacements));
  }
  return e;
}

namespace {

Complex ipow(Complex c, long n) {
  if (n < 0) {
    if (c == Complex(0.0, 0.0)) throw PoleError("0 raised to a negative power");
    return 1.0 / ipow(c, -n);
  }
  Complex r(1.0, 0.0);
  while (n > 0) {
    if (n & 1) r *= c;
    c *= c;
    n >>= 1;
  }
  return r;
}

void check_branch(const Complex& c, const char* what) {
  if (c == Complex(0.0, 0.0)) throw PoleError(std::string(what) + " of zero");
  if (c.imag() == 0.0 && c.real() < 0.0)
    throw BranchCutError(std::string(what) + " on the negative real axis");
}

}  // namespace

Complex eval_complex(const Expr& e, const Point& at) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return Complex(e.value().get_d(), 0.0);
    case Expr::Kind::VarRef: {
      auto it = at.find(e.var());
      if (it == at.end())
        throw EvalError(std::string("unbound variable ") + var_name(e.var()));
      return it->second;
    }
    case Expr::Kind::Sum: {
      Complex s(0.0, 0.0);
      for (const Expr& k : e.children()) s += eval_complex(k, at);
      return s;
    }
    case Expr::Kind::Prod: {
      Complex p(1.0, 0.0);
      for (const Expr& k : e.children()) p *= eval_complex(k, at);
      return p;
    }
    case Expr::Kind::Pow: {
      Complex b = eval_complex(e.child(), at);
      const Rat& q = e.exponent();
      if (is_integer(q)) return ipow(b, q.get_num().get_si());
      check_branch(b, "fractional power");
      return std::exp(q.get_d() * std::log(b));
    }
    case Expr::Kind::Ln: {
      Complex t = eval_complex(e.child(), at);
      check_branch(t, "ln");
      return std::log(t);
    }
    case Expr::Kind::Exp:
      return std::exp(eval_complex(e.child(), at));
  }
  throw EvalError("unreachable");
}

Expr canonicalized_copy(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return Expr::constant(e.value());
    case Expr::Kind::VarRef:
      return Expr::variable(e.var());
    case Expr::Kind::Sum:
    case Expr::Kind::Prod: {
      std::vector<Expr> kids;
      kids.reserve(e.children().size());
      for (const Expr& k : e.children()) kids.push_back(canonicalized_copy(k));
      return e.kind() == Expr::Kind::Sum ? Expr::sum(std::move(kids))
                                         : Expr::product(std::move(kids));
    }
    case Expr::Kind::Pow:
      return Expr::power(canonicalized_copy(e.child()), e.exponent());
    case Expr::Kind::Ln:
      return Expr::ln(canonicalized_copy(e.child()));
    case Expr::Kind::Exp:
      return Expr::exp(canonicalized_copy(e.child()));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_rat(const Rat& q) { return q.get_str(); }

std::string render_node(const Expr& e);

bool needs_parens_as_pow_base(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Sum:
    case Expr::Kind::Prod:
    case Expr::Kind::Pow:
      return true;
    case Expr::Kind::Const:
      return sgn(e.value()) < 0 || !is_integer(e.value());
    default:
      return false;
  }
}

std::string render_exponent(const Rat& q) {
  if (is_integer(q) && sgn(q) > 0) return render_rat(q);
  return "(" + render_rat(q) + ")";
}

std::string render_pow(const Expr& base, const Rat& e) {
  std::string b = render_node(base);
  if (needs_parens_as_pow_base(base)) b = "(" + b + ")";
  return b + "^" + render_exponent(e);
}

std::string render_factor(const Expr& f) {
  if (f.kind() == Expr::Kind::Sum) return "(" + render_node(f) + ")";
  return render_node(f);
}

std::string render_prod(const Expr& e) {
  Rat coeff(1);
  std::vector<std::string> num;
  std::vector<std::string> den;
  for (const Expr& k : e.children()) {
    if (k.kind() == Expr::Kind::Const) {
      coeff = k.value();
      continue;
    }
    auto [base, ex] = std::pair<Expr, Rat>{
        k.kind() == Expr::Kind::Pow ? k.child() : k,
        k.kind() == Expr::Kind::Pow ? k.exponent() : Rat(1)};
    if (is_integer(ex) && sgn(ex) < 0) {
      Rat flipped = -ex;
      den.push_back(flipped == 1 ? render_factor(base) : render_pow(base, flipped));
    } else {
      num.push_back(render_factor(k));
    }
  }
  std::string head;
  if (coeff == -1 && !num.empty()) {
    head = "-";
  } else if (coeff != 1 || num.empty()) {
    head = render_rat(coeff);
    if (!num.empty()) head += "*";
  }
  std::string out = head;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (i) out += "*";
    out += num[i];
  }
  if (out.empty() || out == "-") out += "1";
  if (!den.empty()) {
    if (den.size() == 1) {
      out += "/" + den[0];
    } else {
      out += "/(";
      for (std::size_t i = 0; i < den.size(); ++i) {
        if (i) out += "*";
        out += den[i];
      }
      out += ")";
    }
  }
  return out;
}

// Splits off a leading minus sign for pretty sums.
std::pair<bool, std::string> render_signed(const Expr& t) {
  if (t.kind() == Expr::Kind::Const && sgn(t.value()) < 0)
    return {true, render_rat(-t.value())};
  if (t.kind() == Expr::Kind::Prod) {
    auto [c, core] = term_split(t);
    if (sgn(c) < 0) {
      Expr flipped = Expr::product({Expr::constant(-c), core});
      return {true, render_node(flipped)};
    }
  }
  return {false, render_node(t)};
}

std::string render_node(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      return render_rat(e.value());
    case Expr::Kind::VarRef:
      return var_name(e.var());
    case Expr::Kind::Pow: {
      const Rat& ex = e.exponent();
      if (is_integer(ex) && sgn(ex) < 0) {
        Rat flipped = -ex;
        return "1/" + (flipped == 1 ? render_factor(e.child())
                                    : render_pow(e.child(), flipped));
      }
      return render_pow(e.child(), ex);
    }
    case Expr::Kind::Ln:
      return "ln(" + render_node(e.child()) + ")";
    case Expr::Kind::Exp:
      return "exp(" + render_node(e.child()) + ")";
    case Expr::Kind::Prod:
      return render_prod(e);
    case Expr::Kind::Sum: {
      // Largest term first reads naturally (x^2 + x + 1).
      const auto& kids = e.children();
      std::string out;
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        auto [neg, s] = render_signed(*it);
        if (out.empty()) {
          out = neg ? "-" + s : s;
        } else {
          out += neg ? " - " : " + ";
          out += s;
        }
      }
      return out;
    }
  }
  return "0";
}

}  // namespace

std::string render(const Expr& e) { return render_node(e); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr parse_sum() {
    std::vector<Expr> terms;
    terms.push_back(parse_term());
    while (true) {
      if (eat('+')) {
        terms.push_back(parse_term());
      } else if (eat('-')) {
        terms.push_back(-parse_term());
      } else {
        break;
      }
    }
    return Expr::sum(std::move(terms));
  }

  Expr parse_term() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    while (true) {
      if (eat('*')) {
        factors.push_back(parse_factor());
      } else if (eat('/')) {
        factors.push_back(Expr::power(parse_factor(), rat(-1)));
      } else {
        break;
      }
    }
    return Expr::product(std::move(factors));
  }

  Expr parse_factor() {
    bool neg = false;
    while (true) {
      if (eat('-')) {
        neg = !neg;
      } else if (eat('+')) {
        // tolerated
      } else {
        break;
      }
    }
    Expr e = parse_power();
    return neg ? -e : e;
  }

  Expr parse_power() {
    Expr base = parse_atom();
    skip_ws();
    if (eat('^')) {
      Rat q = parse_exponent_literal();
      return Expr::power(std::move(base), std::move(q));
    }
    return base;
  }

  Rat parse_exponent_literal() {
    skip_ws();
    std::size_t at = pos_;
    bool parens = eat('(');
    bool neg = eat('-');
    Int num = parse_integer("exponent must be a rational literal");
    Int den = 1;
    if (eat('/')) den = parse_integer("exponent denominator must be an integer");
    if (parens && !eat(')')) throw ParseError(pos_, "expected ')' closing exponent");
    if (den == 0) throw ParseError(at, "exponent denominator is zero");
    Rat q(num, den);
    q.canonicalize();
    return neg ? Rat(-q) : q;
  }

  Int parse_integer(const char* err) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(start, err);
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = parse_integer("expected number");
      return Expr::constant(Rat(n));
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view word = s_.substr(start, pos_ - start);
      if (word == "ln" || word == "exp") {
        if (!eat('(')) throw ParseError(pos_, "expected '(' after function name");
        Expr arg = parse_sum();
        if (!eat(')')) throw ParseError(pos_, "expected ')' closing function call");
        return word == "ln" ? Expr::ln(std::move(arg)) : Expr::exp(std::move(arg));
      }
      if (auto v = var_from_name(word)) return Expr::variable(*v);
      throw ParseError(start, "unknown identifier '" + std::string(word) + "'");
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Quotient simplification

namespace {

using FactorMap = std::map<Expr, Rat, ExprLess>;

// Decomposes a summand into coefficient and base->exponent factors.
std::pair<Rat, FactorMap> summand_factors(const Expr& t) {
  FactorMap fm;
  auto [c, core] = term_split(t);
  if (core.is_one()) return {c, fm};
  std::vector<Expr> kids =
      core.kind() == Expr::Kind::Prod ? core.children() : std::vector<Expr>{core};
  for (const Expr& k : kids) {
    auto [base, e] = factor_split(k);
    fm[base] += e;
  }
  return {c, fm};
}

std::vector<Expr> summands(const Expr& e) {
  if (e.kind() == Expr::Kind::Sum) return e.children();
  return {e};
}

Expr rebuild_summand(const Rat& c, const FactorMap& fm) {
  std::vector<Expr> fs;
  fs.push_back(Expr::constant(c));
  for (const auto& [base, e] : fm) fs.push_back(Expr::power(base, e));
  return Expr::product(std::move(fs));
}

}  // namespace

Expr simplified_quotient(const Expr& num, const Expr& den) {
  if (num.is_zero()) return num;
  std::vector<std::pair<Rat, FactorMap>> parts;
  for (const Expr& t : summands(num)) parts.push_back(summand_factors(t));
  for (const Expr& t : summands(den)) parts.push_back(summand_factors(t));
  // Common part: bases present in every summand, with the minimum exponent.
  FactorMap common = parts.front().second;
  for (std::size_t i = 1; i < parts.size() && !common.empty(); ++i) {
    FactorMap next;
    for (const auto& [base, e] : common) {
      auto it = parts[i].second.find(base);
      if (it != parts[i].second.end()) next[base] = std::min(e, it->second);
    }
    common = std::move(next);
  }
  auto strip = [&](const Expr& side) {
    std::vector<Expr> rebuilt;
    for (const Expr& t : summands(side)) {
      auto [c, fm] = summand_factors(t);
      for (const auto& [base, e] : common) {
        Rat left = fm[base] - e;
        if (left == 0) fm.erase(base); else fm[base] = left;
      }
      rebuilt.push_back(rebuild_summand(c, fm));
    }
    return Expr::sum(std::move(rebuilt));
  };
  Expr n2 = strip(num);
  Expr d2 = strip(den);
  return n2 / d2;
}

}  // namespace websym
