#include "websym/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "websym/detrand.hpp"
#include "websym/error.hpp"

namespace websym {

std::vector<Complex> poly_roots(std::vector<Complex> coeffs_desc) {
  while (!coeffs_desc.empty() && std::abs(coeffs_desc.front()) == 0.0)
    coeffs_desc.erase(coeffs_desc.begin());
  if (coeffs_desc.size() < 2) return {};
  std::size_t d = coeffs_desc.size() - 1;
  Complex lead = coeffs_desc.front();
  for (Complex& c : coeffs_desc) c /= lead;
  auto eval = [&](Complex t) {
    Complex v(0.0, 0.0);
    for (const Complex& c : coeffs_desc) v = v * t + c;
    return v;
  };
  double radius = 0.0;
  for (std::size_t i = 1; i < coeffs_desc.size(); ++i)
    radius = std::max(radius, std::abs(coeffs_desc[i]));
  radius = 1.0 + radius;
  std::vector<Complex> w(d);
  Complex seed(0.4, 0.9);
  Complex acc(1.0, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    acc *= seed;
    w[k] = radius * acc;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      Complex denom(1.0, 0.0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) denom *= (w[k] - w[j]);
      Complex step = eval(w[k]) / denom;
      w[k] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-15 * radius) break;
  }
  std::sort(w.begin(), w.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return w;
}

namespace {

struct LeafSlopeValue {
  Complex p, px, py;
};

// Per-point slope data for slope- and coefficient-form webs.
class SlopeEvaluator {
 public:
  explicit SlopeEvaluator(const Web& w) : w_(w) {
    if (w.has_slopes()) {
      for (const Slope& s : w.slopes()) {
        slope_.push_back(s.expr);
        slope_x_.push_back(diff(s.expr, w.var1()));
        slope_y_.push_back(diff(s.expr, w.var2()));
      }
    } else if (w.has_coefficients()) {
      MPoly p = w.presentation();
      px_ = p.diff(w.var1());
      py_ = p.diff(w.var2());
      pz_ = p.diff(Var::z);
      coeffs_ = p.coeffs_in(Var::z);
    } else {
      throw ValidationError("web carries neither slopes nor coefficients");
    }
  }

  std::vector<LeafSlopeValue> at(const Point& pt) const {
    std::vector<LeafSlopeValue> out;
    if (!slope_.empty()) {
      for (std::size_t i = 0; i < slope_.size(); ++i)
        out.push_back({eval_complex(slope_[i], pt), eval_complex(slope_x_[i], pt),
                       eval_complex(slope_y_[i], pt)});
      return out;
    }
    std::vector<Complex> cs;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      cs.push_back(it->eval_complex(pt));
    auto roots = poly_roots(std::move(cs));
    if (static_cast<int>(roots.size()) != w_.degree())
      throw PoleError("presentation polynomial drops degree at the sample point");
    for (const Complex& r : roots) {
      Point at = pt;
      at[Var::z] = r;
      Complex dz = pz_.eval_complex(at);
      if (std::abs(dz) < 1e-12)
        throw PoleError("repeated root at the sample point");
      out.push_back({r, -px_.eval_complex(at) / dz, -py_.eval_complex(at) / dz});
    }
    return out;
  }

 private:
  const Web& w_;
  std::vector<Expr> slope_, slope_x_, slope_y_;
  MPoly px_, py_, pz_;
  std::vector<MPoly> coeffs_;
};

struct FieldData {
  Expr a1, a2, a1x, a1y, a2x, a2y;
};

FieldData field_data(const VectorField& x, const Web& w) {
  if (x.coords != w.coords())
    throw ValidationError("field and web use different coordinate pairs");
  return {x.a1,  x.a2,  diff(x.a1, w.var1()), diff(x.a1, w.var2()),
          diff(x.a2, w.var1()), diff(x.a2, w.var2())};
}

Point to_point(const Web& w, const std::array<double, 2>& p) {
  return Point{{w.var1(), Complex(p[0], 0.0)}, {w.var2(), Complex(p[1], 0.0)}};
}

double discriminant_proxy(const Web& w, const SlopeEvaluator* slopes, const Point& pt) {
  if (slopes) {
    auto vals = slopes->at(pt);
    Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) {
        Complex d = vals[i].p - vals[j].p;
        prod *= d * d;
      }
    return std::abs(prod);
  }
  // Foliation-only web: product of squared normalized transversalities.
  const auto& fs = w.foliations();
  double prod = 1.0;
  std::vector<std::array<Complex, 2>> grads;
  for (const Expr& f : fs)
    grads.push_back({eval_complex(diff(f, w.var1()), pt),
                     eval_complex(diff(f, w.var2()), pt)});
  for (std::size_t i = 0; i < fs.size(); ++i) {
    double norm = std::abs(grads[i][0]) * std::abs(grads[i][0]) +
                  std::abs(grads[i][1]) * std::abs(grads[i][1]);
    if (norm < 1e-12) throw PoleError("degenerate foliation gradient");
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      Complex wedge = grads[i][0] * grads[j][1] - grads[i][1] * grads[j][0];
      double normj = std::abs(grads[j][0]) * std::abs(grads[j][0]) +
                     std::abs(grads[j][1]) * std::abs(grads[j][1]);
      double t = std::abs(wedge) / std::sqrt(norm * normj);
      prod *= t * t;
    }
  }
  return prod;
}

bool web_uses_foliation_route(const Web& w) {
  return !w.has_slopes() && w.has_foliations();
}

}  // namespace

SamplePlan make_plan(const Web& w, const std::vector<VectorField>& fields,
                     const PlanConfig& cfg) {
  SamplePlan plan;
  plan.seed = cfg.seed;
  DetRand rng(cfg.seed);
  std::unique_ptr<SlopeEvaluator> slopes;
  if (!web_uses_foliation_route(w)) slopes = std::make_unique<SlopeEvaluator>(w);
  std::vector<FieldData> fds;
  for (const VectorField& f : fields) fds.push_back(field_data(f, w));
  for (int attempt = 0;
       attempt < cfg.max_attempts && static_cast<int>(plan.points.size()) < cfg.count;
       ++attempt) {
    std::array<double, 2> p{rng.in(cfg.lo, cfg.hi), rng.in(cfg.lo, cfg.hi)};
    Point pt = to_point(w, p);
    try {
      if (discriminant_proxy(w, slopes.get(), pt) <= cfg.discriminant_floor) continue;
      if (web_uses_foliation_route(w))
        for (const Expr& f : w.foliations()) eval_complex(f, pt);
      for (const FieldData& fd : fds) {
        eval_complex(fd.a1, pt);
        eval_complex(fd.a2, pt);
        eval_complex(fd.a1x, pt);
        eval_complex(fd.a1y, pt);
        eval_complex(fd.a2x, pt);
        eval_complex(fd.a2y, pt);
      }
    } catch (const EvalError&) {
      continue;
    }
    plan.points.push_back(p);
  }
  if (static_cast<int>(plan.points.size()) < cfg.count)
    throw EmptyPlanError("sample plan exhausted: singular locus or branch "
                         "constraints exclude too many points");
  return plan;
}

Residual residual(const Web& w, const VectorField& x, const SamplePlan& plan) {
  if (plan.points.empty()) throw EmptyPlanError("empty sample plan");
  FieldData fd = field_data(x, w);
  Residual out;
  out.per_leaf.assign(static_cast<std::size_t>(w.degree()), LeafWorst{});
  for (int i = 0; i < w.degree(); ++i) out.per_leaf[static_cast<std::size_t>(i)].leaf = i;

  if (web_uses_foliation_route(w)) {
    // d(X(F)) ^ dF, normalized by |grad F|^2.
    const auto& fs = w.foliations();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Expr h = x.apply(fs[i]);
      Expr fx = diff(fs[i], w.var1());
      Expr fy = diff(fs[i], w.var2());
      Expr wedge = diff(h, w.var1()) * fy - diff(h, w.var2()) * fx;
      for (const auto& p : plan.points) {
        Point pt = to_point(w, p);
        double norm = std::norm(eval_complex(fx, pt)) + std::norm(eval_complex(fy, pt));
        double r = std::abs(eval_complex(wedge, pt)) / norm;
        LeafWorst& lw = out.per_leaf[i];
        if (r >= lw.value) lw = {static_cast<int>(i), r, p};
        out.max_abs = std::max(out.max_abs, r);
      }
    }
    return out;
  }

  SlopeEvaluator slopes(w);
  for (const auto& p : plan.points) {
    Point pt = to_point(w, p);
    auto vals = slopes.at(pt);
    Complex a1 = eval_complex(fd.a1, pt), a2 = eval_complex(fd.a2, pt);
    Complex a1x = eval_complex(fd.a1x, pt), a1y = eval_complex(fd.a1y, pt);
    Complex a2x = eval_complex(fd.a2x, pt), a2y = eval_complex(fd.a2y, pt);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const LeafSlopeValue& s = vals[i];
      Complex r = -a1 * s.px - a2 * s.py + a2x + (a2y - a1x) * s.p - a1y * s.p * s.p;
      double ra = std::abs(r);
      LeafWorst& lw = out.per_leaf[i];
      if (ra >= lw.value) lw = {static_cast<int>(i), ra, p};
      out.max_abs = std::max(out.max_abs, ra);
    }
  }
  return out;
}

Certificate verify_certificate(const Web& w, const VectorField& x, double tol) {
  if (tol <= 0) throw ValidationError("tolerance must be positive");
  SamplePlan plan = make_plan(w, {x});
  Certificate c;
  c.tol = tol;
  c.details = residual(w, x, plan);
  c.pass = c.details.max_abs < tol;
  return c;
}

double discriminant_cofactor_residual(const Web& w, const VectorField& x,
                                      const SamplePlan& plan) {
  if (web_uses_foliation_route(w))
    throw ValidationError("discriminant cofactor check needs slopes or coefficients");
  SlopeEvaluator slopes(w);
  FieldData fd = field_data(x, w);
  double worst = 0.0;
  for (const auto& p : plan.points) {
    Point pt = to_point(w, p);
    auto vals = slopes.at(pt);
    Complex a1 = eval_complex(fd.a1, pt), a2 = eval_complex(fd.a2, pt);
    Complex a1x = eval_complex(fd.a1x, pt), a1y = eval_complex(fd.a1y, pt);
    Complex a2y = eval_complex(fd.a2y, pt);
    Complex delta(1.0, 0.0);
    Complex logderiv(0.0, 0.0);
    Complex ksum(0.0, 0.0);
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) {
        Complex d = vals[i].p - vals[j].p;
        delta *= d * d;
        Complex xd = a1 * (vals[i].px - vals[j].px) + a2 * (vals[i].py - vals[j].py);
        logderiv += 2.0 * xd / d;
        ksum += -(a1x - a2y - a1y * (vals[i].p + vals[j].p));
      }
    Complex xdelta = delta * logderiv;
    Complex k = 2.0 * ksum;
    double dev = std::abs(xdelta - k * delta) / (1.0 + std::abs(k * delta));
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace websym
