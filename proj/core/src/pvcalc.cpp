#include "decaylab/pvcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "decaylab/errors.hpp"

namespace decaylab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const cplx kI{0.0, 1.0};

void check_finite(double v, double where) {
  if (!std::isfinite(v)) throw NumericError("non-finite integrand sample at " + std::to_string(where));
}

void check_not_pole(const std::vector<PoleTerm>& poles, cplx z) {
  for (const auto& p : poles)
    if (std::abs(z - p.location) <= 1e-14 * std::max(1.0, std::abs(p.location)))
      throw PoleError("evaluation at a pole of the continuation", p.location);
}

// eta_-: the partial fractions of tau*eta with poles below the axis.
cplx eta_minus(const Model& m, cplx z) { return RationalFunction::pole_sum(m.lower_poles(), z); }

// (1/pi) int_lo^inf eta(E)/(E - z) dE for complex z off the support.
cplx transform_quadrature(const Model& m, cplx z, const Tolerances& tol) {
  const double lo = m.half_line() ? 0.0 : -kInf;
  auto f = [&](double e) -> cplx { return m.eta(e) / (e - z); };
  std::vector<double> br = eta_features(m);
  br.push_back(lo);
  if (z.real() > lo) br.push_back(z.real());
  br.push_back(kInf);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  auto r = quad::integrate_pieces(f, br, quad_options(tol));
  return quad::require(r, "Cauchy transform of eta") / kPi;
}

// Integrals I_j(z) = int_0^inf dE / ((E - q)^j (E - z)), j = 1..m, with z-derivatives.
void half_line_kernels(cplx q, int m, cplx z, cplx logmz, std::vector<cplx>& I, std::vector<cplx>& dI) {
  I.assign(m, 0.0);
  dI.assign(m, 0.0);
  const cplx d = z - q;
  const cplx mq = -q;
  const double dist = q.real() <= 0.0 ? std::abs(q) : std::abs(q.imag());
  if (std::abs(d) < 0.25 * dist) {
    // Taylor series about q: I_j = (-q)^-j sum_n r^n / (j + n), r = d / (-q).
    const cplx r = d / mq;
    for (int j = 1; j <= m; ++j) {
      cplx s = 0.0;
      cplx ds = 0.0;
      cplx rn = 1.0;
      for (int n = 0; n < 60; ++n) {
        s += rn / static_cast<double>(j + n);
        if (n + 1 < 60) ds += static_cast<double>(n + 1) * rn / static_cast<double>(j + n + 1);
        rn *= r;
        if (std::abs(rn) < 1e-18) break;
      }
      const cplx pj = std::pow(mq, -j);
      I[j - 1] = pj * s;
      dI[j - 1] = pj / mq * ds;
    }
    return;
  }
  I[0] = (std::log(mq) - logmz) / d;
  dI[0] = (-1.0 / z - I[0]) / d;
  cplx inv_pow = 1.0 / mq;  // (-q)^{1-j} for j = 2
  for (int j = 2; j <= m; ++j) {
    const cplx J = inv_pow / static_cast<double>(j - 1);
    I[j - 1] = (I[j - 2] - J) / d;
    dI[j - 1] = (dI[j - 2] - I[j - 1]) / d;
    inv_pow /= mq;
  }
}

void half_line_sums(const Model& m, cplx z, cplx& value, cplx& deriv) {
  const cplx logmz = halfline::log_physical(z);
  value = 0.0;
  deriv = 0.0;
  std::vector<cplx> I, dI;
  for (const auto& p : m.poles()) {
    half_line_kernels(p.location, p.multiplicity(), z, logmz, I, dI);
    for (int j = 0; j < p.multiplicity(); ++j) {
      value += p.laurent[j] * I[j];
      deriv += p.laurent[j] * dI[j];
    }
  }
  value /= kPi;
  deriv /= kPi;
}

}  // namespace

double pv_integral(const std::function<double(double)>& f, double lambda, double a, double b,
                   const quad::Options& opt, const std::vector<double>& features) {
  if (!(a < b)) throw DomainError("pv_integral: empty domain");
  if (!std::isfinite(lambda)) throw DomainError("pv_integral: non-finite pole location");
  if (lambda == a || lambda == b) throw DomainError("pv_integral: pole on the domain boundary");
  auto plain = [&](double e) {
    const double v = f(e);
    check_finite(v, e);
    return v / (e - lambda);
  };
  auto pieces = [&](double lo, double hi) {
    std::vector<double> br{lo};
    for (double p : features)
      if (p > lo && p < hi) br.push_back(p);
    br.push_back(hi);
    std::sort(br.begin(), br.end());
    return br;
  };
  if (lambda < a || lambda > b)
    return quad::require(quad::integrate_pieces(plain, pieces(a, b), opt), "pv_integral");

  double h = std::min({lambda - a, b - lambda, std::max(1.0, std::abs(lambda))});
  // features are smooth breakpoints; one sitting almost on lambda is left to the
  // window rule rather than collapsing the window to a few ulps
  const double floor = 1e-6 * h;
  for (double p : features) {
    const double d = std::abs(p - lambda);
    if (d > floor) h = std::min(h, d);
  }
  const double fl = f(lambda);
  check_finite(fl, lambda);
  auto sub = [&](double e) {
    const double v = f(e);
    check_finite(v, e);
    return (v - fl) / (e - lambda);
  };
  double total = quad::require(quad::integrate_finite(sub, lambda - h, lambda, opt), "pv_integral window");
  total += quad::require(quad::integrate_finite(sub, lambda, lambda + h, opt), "pv_integral window");

  if (std::isinf(a) && std::isinf(b)) {
    // Pair the two tails so constant parts cancel exactly.
    auto tails = [&](double u) {
      const double fp = f(lambda + u);
      const double fm = f(lambda - u);
      check_finite(fp, lambda + u);
      check_finite(fm, lambda - u);
      return (fp - fm) / u;
    };
    std::vector<double> br{h, kInf};
    for (double p : features) {
      const double u = std::abs(p - lambda);
      if (u > h) br.push_back(u);
    }
    std::sort(br.begin(), br.end());
    total += quad::require(quad::integrate_pieces(tails, br, opt), "pv_integral tails");
  } else {
    if (lambda - h > a)
      total += quad::require(quad::integrate_pieces(plain, pieces(a, lambda - h), opt), "pv_integral left");
    if (lambda + h < b)
      total += quad::require(quad::integrate_pieces(plain, pieces(lambda + h, b), opt), "pv_integral right");
  }
  return total;
}

std::vector<double> eta_features(const Model& model) {
  std::vector<double> out;
  for (const auto& p : model.poles()) {
    const double c = p.location.real();
    const double w = std::abs(p.location.imag());
    for (double k : {-4.0, -1.0, 0.0, 1.0, 4.0}) out.push_back(c + k * w);
  }
  if (model.half_line()) std::erase_if(out, [](double x) { return x <= 0.0; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TransformValue hilbert_full(const Model& model, double lambda, TransformMethod method, const Tolerances& tol) {
  if (model.half_line()) throw WrongSupportError("hilbert_full requires a full-line profile");
  TransformValue v{0.0, model.eta(lambda), lambda};
  if (model.flat()) return v;  // PV of a constant vanishes
  if (method == TransformMethod::Quadrature) {
    auto eta = [&](double e) { return model.eta(e); };
    v.sigma = pv_integral(eta, lambda, -kInf, kInf, quad_options(tol), eta_features(model)) / kPi;
  } else {
    v.sigma = -2.0 * eta_minus(model, lambda).imag();
  }
  return v;
}

TransformValue hilbert_half(const Model& model, double lambda, TransformMethod method, const Tolerances& tol) {
  if (!model.half_line()) throw WrongSupportError("hilbert_half requires a half-line profile");
  if (lambda == 0.0) throw DomainError("hilbert_half: lambda = 0 is the branch point");
  TransformValue v{0.0, model.eta(lambda), lambda};
  if (method == TransformMethod::Quadrature) {
    auto eta = [&](double e) { return model.eta(e); };
    v.sigma = pv_integral(eta, lambda, 0.0, kInf, quad_options(tol), eta_features(model)) / kPi;
  } else {
    v.sigma = halfline::xi_physical(model, lambda).real();
  }
  return v;
}

double hilbert_half_deriv(const Model& model, double lambda, TransformMethod method, const Tolerances& tol) {
  if (!model.half_line()) throw WrongSupportError("hilbert_half_deriv requires a half-line profile");
  if (!(lambda < 0.0)) throw DomainError("hilbert_half_deriv requires lambda < 0");
  if (method == TransformMethod::ClosedForm) return halfline::xi_physical_derivative(model, lambda).real();
  auto f = [&](double e) {
    const double d = e - lambda;
    return model.eta(e) / (d * d);
  };
  // the integrand peaks on the scale |lambda| next to the threshold
  std::vector<double> br = eta_features(model);
  for (double e = -lambda; e < 1e3 * model.energy_scale(); e *= 4.0) br.push_back(e);
  br.push_back(0.0);
  br.push_back(kInf);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  return quad::require(quad::integrate_pieces(f, br, quad_options(tol)), "hilbert_half_deriv") / kPi;
}

TransformValue hilbert(const Model& model, double lambda, TransformMethod method, const Tolerances& tol) {
  return model.half_line() ? hilbert_half(model, lambda, method, tol) : hilbert_full(model, lambda, method, tol);
}

XiValue xi_eval(const Model& model, cplx z, Sheet sheet, TransformMethod method, const Tolerances& tol) {
  XiValue out{z, 0.0, sheet};
  const bool quadrature = method == TransformMethod::Quadrature;
  const double y = z.imag();

  if (!model.half_line()) {
    if (model.flat()) {
      const cplx boundary = kI * model.flat_density();
      out.value = (sheet == Sheet::Physical && y < 0) ? cplx(0.0) : boundary;
      return out;
    }
    if (y == 0.0) {
      const auto t = hilbert_full(model, z.real(), method, tol);
      out.value = {t.sigma, t.eta_at};
      return out;
    }
    if (sheet == Sheet::Physical) {
      if (quadrature)
        out.value = cauchy_integral(model, z, tol);
      else
        out.value = y > 0 ? 2.0 * kI * eta_minus(model, z) : cplx(0.0);
      return out;
    }
    check_not_pole(model.lower_poles(), z);
    if (quadrature)
      out.value = transform_quadrature(model, z, tol) + (y < 0 ? 2.0 * kI * model.eta_analytic(z) : cplx(0.0));
    else
      out.value = 2.0 * kI * eta_minus(model, z);
    return out;
  }

  // Half line: cut along [0, inf).
  if (z == cplx(0.0)) throw DomainError("xi: z = 0 is the branch point");
  if (y == 0.0) {
    const double x = z.real();
    const auto t = hilbert_half(model, x, method, tol);
    if (x > 0) {
      out.value = {t.sigma, t.eta_at};
    } else {
      // Below the negative axis the right sheet differs by 2 i eta.
      out.value = t.sigma;
      if (sheet == Sheet::Continued) {
        check_not_pole(model.poles(), z);
        out.value += 2.0 * kI * model.eta_analytic(z);
      }
    }
    return out;
  }
  out.value = quadrature ? transform_quadrature(model, z, tol) : halfline::xi_physical(model, z);
  if (sheet == Sheet::Continued && y < 0) {
    check_not_pole(model.poles(), z);
    out.value += 2.0 * kI * model.eta_analytic(z);
  }
  return out;
}

cplx xi_continued_derivative(const Model& model, cplx z) {
  if (model.flat()) return 0.0;
  if (!model.half_line()) {
    check_not_pole(model.lower_poles(), z);
    return 2.0 * kI * RationalFunction::pole_sum_derivative(model.lower_poles(), z);
  }
  cplx d = halfline::xi_physical_derivative(model, z);
  if (z.imag() < 0) {
    check_not_pole(model.poles(), z);
    d += 2.0 * kI * model.eta_analytic_derivative(z);
  }
  return d;
}

cplx cauchy_integral(const Model& model, cplx z, const Tolerances& tol) {
  if (model.half_line()) throw WrongSupportError("cauchy_integral requires a full-line profile");
  if (model.flat()) throw WrongModelError("cauchy_integral requires a decaying profile");
  if (z.imag() == 0.0) throw DomainError("cauchy_integral: z must be off the real axis");
  auto f = [&](double x) -> cplx {
    const auto t = hilbert_full(model, x, TransformMethod::Auto, tol);
    return cplx(t.sigma, t.eta_at) / (x - z);
  };
  std::vector<double> br = eta_features(model);
  br.push_back(-kInf);
  br.push_back(z.real());
  br.push_back(kInf);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  auto r = quad::integrate_pieces(f, br, quad_options(tol));
  return quad::require(r, "Cauchy integral") / (2.0 * kPi * kI);
}

double sigma_tilde(const Model& model, double x, double y, const Tolerances& tol) {
  if (x == y) throw DomainError("sigma_tilde: x = y is degenerate (delta term)");
  const double lo = model.half_line() ? 0.0 : -kInf;
  if (model.half_line() && (x == 0.0 || y == 0.0)) throw DomainError("sigma_tilde: branch point");
  const auto opt = quad_options(tol);

  const double p = std::min(x, y);
  const double q = std::max(x, y);
  double d = (q - p) / 3.0;
  std::vector<double> centres;
  for (double c : {p, q}) {
    if (c > lo) {
      centres.push_back(c);
      if (std::isfinite(lo)) d = std::min(d, 0.5 * (c - lo));
    }
  }

  double total = 0.0;
  std::vector<double> br{lo};
  for (double c : centres) {
    const double other = (c == p) ? q : p;
    auto g = [&](double e) { return model.eta(e) / (e - other); };
    const double gc = g(c);
    auto sub = [&](double e) {
      const double v = g(e);
      check_finite(v, e);
      return (v - gc) / (e - c);
    };
    total += quad::require(quad::integrate_finite(sub, c - d, c, opt), "sigma_tilde window");
    total += quad::require(quad::integrate_finite(sub, c, c + d, opt), "sigma_tilde window");
    br.push_back(c - d);
    br.push_back(c + d);
  }
  br.push_back(kInf);
  auto plain = [&](double e) {
    const double v = model.eta(e);
    check_finite(v, e);
    return v / ((e - x) * (e - y));
  };
  // Complement of the windows: [br0, br1], [br2, br3], ...
  for (std::size_t i = 0; i + 1 < br.size(); i += 2)
    if (br[i] < br[i + 1]) total += quad::require(quad::integrate(plain, br[i], br[i + 1], opt), "sigma_tilde");
  return total / kPi;
}

namespace halfline {

cplx log_physical(cplx z) {
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (x > 0) return {std::log(x), -kPi};
    if (x < 0) return std::log(-x);
    throw DomainError("Log(-z) at the branch point z = 0");
  }
  return std::log(-z);
}

cplx log_right(cplx z) {
  if (z.imag() < 0.0) return std::log(-z) - 2.0 * kPi * kI;
  return log_physical(z);
}

cplx xi_physical(const Model& model, cplx z) {
  if (!model.half_line()) throw WrongSupportError("half-line transform requires a half-line profile");
  cplx v, d;
  half_line_sums(model, z, v, d);
  return v;
}

cplx xi_physical_derivative(const Model& model, cplx z) {
  if (!model.half_line()) throw WrongSupportError("half-line transform requires a half-line profile");
  cplx v, d;
  half_line_sums(model, z, v, d);
  return d;
}

cplx regular_part(const Model& model, cplx z) {
  const cplx L = log_physical(z) - std::log(model.log_scale_c());
  return kPi * xi_physical(model, z) + model.eta_analytic(z) * L;
}

}  // namespace halfline

}  // namespace decaylab
