#include "websym/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "websym/error.hpp"

namespace websym {

int Mono::deg() const {
  int d = 0;
  for (int i = 0; i < kVarCount; ++i) d += e[i];
  return d;
}

bool Mono::divisible_by(const Mono& m) const {
  for (int i = 0; i < kVarCount; ++i)
    if (e[i] < m.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& m) const {
  Mono r;
  for (int i = 0; i < kVarCount; ++i) r.e[i] = e[i] + m.e[i];
  return r;
}

Mono Mono::operator/(const Mono& m) const {
  Mono r;
  for (int i = 0; i < kVarCount; ++i) r.e[i] = e[i] - m.e[i];
  return r;
}

bool grlex_less(const Mono& a, const Mono& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  for (int i = kVarCount - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

MPoly::MPoly(Rat c) {
  c.canonicalize();
  if (c != 0) t_.emplace(Mono{}, std::move(c));
}

MPoly MPoly::variable(Var v, int power) {
  MPoly p;
  if (power < 0) throw ValidationError("negative power in monomial");
  Mono m;
  m.e[static_cast<int>(v)] = power;
  p.t_.emplace(m, Rat(1));
  return p;
}

MPoly MPoly::monomial(Mono m, Rat c) {
  MPoly p;
  c.canonicalize();
  if (c != 0) p.t_.emplace(m, std::move(c));
  return p;
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.deg() == 0);
}

Rat MPoly::constant_value() const {
  auto it = t_.find(Mono{});
  return it == t_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  return t_.empty() ? -1 : t_.rbegin()->first.deg();
}

int MPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m[v]);
  return t_.empty() ? -1 : d;
}

Mono MPoly::leading_mono() const { return t_.rbegin()->first; }
const Rat& MPoly::leading_coeff() const { return t_.rbegin()->second; }

unsigned MPoly::var_mask() const {
  unsigned mask = 0;
  for (const auto& [m, c] : t_)
    for (int i = 0; i < kVarCount; ++i)
      if (m.e[i] > 0) mask |= 1u << i;
  return mask;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (c != 0) t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [m, cc] : t_) r.t_.emplace(m, cc * c);
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r{Rat(1)};
  MPoly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

MPoly MPoly::diff(Var v) const {
  int vi = static_cast<int>(v);
  MPoly r;
  for (const auto& [m, c] : t_) {
    if (m.e[vi] == 0) continue;
    Mono m2 = m;
    m2.e[vi] -= 1;
    r.add_term(m2, c * Rat(m.e[vi]));
  }
  return r;
}

MPoly MPoly::subst(Var v, const Rat& value) const {
  int vi = static_cast<int>(v);
  MPoly r;
  for (const auto& [m, c] : t_) {
    Mono m2 = m;
    m2.e[vi] = 0;
    r.add_term(m2, c * pow_rat(value, m.e[vi]));
  }
  return r;
}

Rat MPoly::eval(const std::map<Var, Rat>& at) const {
  Rat total(0);
  for (const auto& [m, c] : t_) {
    Rat term = c;
    for (int i = 0; i < kVarCount; ++i) {
      if (m.e[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end())
        throw EvalError(std::string("unbound variable ") + var_name(static_cast<Var>(i)));
      term *= pow_rat(it->second, m.e[i]);
    }
    total += term;
  }
  return total;
}

Complex MPoly::eval_complex(const Point& at) const {
  Complex total(0.0, 0.0);
  for (const auto& [m, c] : t_) {
    Complex term(c.get_d(), 0.0);
    for (int i = 0; i < kVarCount; ++i) {
      if (m.e[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end())
        throw EvalError(std::string("unbound variable ") + var_name(static_cast<Var>(i)));
      Complex p(1.0, 0.0);
      for (int k = 0; k < m.e[i]; ++k) p *= it->second;
      term *= p;
    }
    total += term;
  }
  return total;
}

std::vector<MPoly> MPoly::coeffs_in(Var v) const {
  int vi = static_cast<int>(v);
  int d = std::max(degree_in(v), 0);
  std::vector<MPoly> out(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : t_) {
    Mono m2 = m;
    int k = m2.e[vi];
    m2.e[vi] = 0;
    out[static_cast<std::size_t>(k)].add_term(m2, c);
  }
  return out;
}

MPoly MPoly::from_coeffs_in(Var v, const std::vector<MPoly>& ascending) {
  MPoly r;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    r += ascending[k] * MPoly::variable(v, static_cast<int>(k));
  }
  return r;
}

Expr MPoly::to_expr() const {
  std::vector<Expr> terms;
  for (const auto& [m, c] : t_) {
    std::vector<Expr> fs;
    fs.push_back(Expr::constant(c));
    for (int i = 0; i < kVarCount; ++i)
      if (m.e[i] > 0) fs.push_back(Expr::power(Expr::variable(static_cast<Var>(i)), rat(m.e[i])));
    terms.push_back(Expr::product(std::move(fs)));
  }
  return Expr::sum(std::move(terms));
}

std::string MPoly::render() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool have_vars = m.deg() > 0;
    if (a != 1 || !have_vars) {
      os << a.get_str();
      if (have_vars) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < kVarCount; ++i) {
      if (m.e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(static_cast<Var>(i));
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

std::optional<MPoly> divides(const MPoly& g, const MPoly& f) {
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  MPoly q;
  MPoly r = f;
  const Mono gm = g.leading_mono();
  const Rat& gc = g.leading_coeff();
  while (!r.is_zero()) {
    Mono rm = r.leading_mono();
    if (!rm.divisible_by(gm)) return std::nullopt;
    MPoly t = MPoly::monomial(rm / gm, r.leading_coeff() / gc);
    q += t;
    r -= t * g;
  }
  return q;
}

ZNormalized z_normalize(const MPoly& p) {
  if (p.is_zero()) return {Rat(0), MPoly()};
  Int den_lcm = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading_coeff()) < 0) content = -content;
  MPoly prim = p * (Rat(1) / content);
  return {content, prim};
}

namespace {

Var main_variable(const MPoly& a, const MPoly& b) {
  unsigned mask = a.var_mask() | b.var_mask();
  for (int i = kVarCount - 1; i >= 0; --i)
    if (mask & (1u << i)) return static_cast<Var>(i);
  return Var::x;  // both constant; caller handles
}

MPoly content_in(const MPoly& p, Var v) {
  MPoly c;
  for (const MPoly& coeff : p.coeffs_in(v)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c.is_zero() ? MPoly(Rat(1)) : c;
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  auto q = divides(g, f);
  if (!q) throw InternalError("exact polynomial division left a remainder");
  return *q;
}

// One pseudo-reduction pass: eliminates the leading v-term of f against g.
MPoly pseudo_rem(MPoly f, const MPoly& g, Var v) {
  int dg = g.degree_in(v);
  auto gcoeffs = g.coeffs_in(v);
  const MPoly& glead = gcoeffs.back();
  while (!f.is_zero()) {
    int df = f.degree_in(v);
    if (df < dg) break;
    auto fcoeffs = f.coeffs_in(v);
    const MPoly& flead = fcoeffs.back();
    MPoly shift = MPoly::variable(v, df - dg);
    f = f * glead - g * (flead * shift);
  }
  return f;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return z_normalize(b).primitive;
  if (b.is_zero()) return z_normalize(a).primitive;
  MPoly f = z_normalize(a).primitive;
  MPoly g = z_normalize(b).primitive;
  if (f.is_constant() || g.is_constant()) return MPoly(Rat(1));
  Var v = main_variable(f, g);
  MPoly cf = content_in(f, v);
  MPoly cg = content_in(g, v);
  MPoly c = gcd(cf, cg);
  f = exact_div(f, cf);
  g = exact_div(g, cg);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  // Primitive PRS.
  while (!g.is_zero()) {
    MPoly r = pseudo_rem(f, g, v);
    f = std::move(g);
    if (r.is_zero()) {
      g = MPoly();
    } else if (r.degree_in(v) <= 0) {
      // Nontrivial constant (in v) remainder: gcd in v is 1.
      f = MPoly(Rat(1));
      g = MPoly();
    } else {
      g = exact_div(r, content_in(r, v));
      g = z_normalize(g).primitive;
    }
  }
  return z_normalize(c * f).primitive;
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return z_normalize(exact_div(a * b, gcd(a, b))).primitive;
}

}  // namespace websym
