#include "decaylab/tailfit.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "decaylab/errors.hpp"
#include "decaylab/pvcalc.hpp"
#include "decaylab/quadrature.hpp"

namespace decaylab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void require_half_rational(const Model& m, const char* what) {
  if (!m.half_line()) throw WrongSupportError(std::string(what) + " requires a half-line profile");
}

}  // namespace

cplx resolvent(const Model& model, cplx z, Sheet sheet) {
  const cplx d = model.alpha() - z - kPi * xi_eval(model, z, sheet).value;
  if (d == 0.0) throw PoleError("resolvent pole", z);
  return 1.0 / d;
}

CutJump cut_jump(const Model& model, double mu, bool swap) {
  require_half_rational(model, "cut_jump");
  if (!(mu > 0.0)) throw DomainError("cut_jump requires mu > 0");
  const cplx z(0.0, -mu);
  // eta = k P / Q; D_R = D_L - 2 pi i eta, so F = 2 pi i k P / (D_L (Q D_L - 2 pi i k P)).
  const auto& r = model.rational();
  const cplx kp = r.scale() * r.numerator()(z);
  const cplx q = r.denominator()(z);
  const cplx dl = model.alpha() - z - kPi * halfline::xi_physical(model, z);
  const cplx qdr = q * dl - 2.0 * kPi * kI * kp;
  const double tiny = 1e-300;
  if (std::abs(dl) < tiny || std::abs(qdr) < tiny) throw PoleError("cut_jump at a resolvent pole", z);
  cplx f = 2.0 * kPi * kI * kp / (dl * qdr);
  if (swap) f = -f;
  return {mu, f};
}

cplx cut_amplitude(const Model& model, double t, const Tolerances& tol) {
  require_half_rational(model, "cut integral");
  if (!(t > 0.0)) throw DomainError("cut integral requires t > 0");
  const double hb = model.hbar();
  // mu = hbar u / t; e^{-u} < 1e-16 beyond u = 37.
  auto g = [&](double u) -> cplx { return cut_jump(model, hb * u / t).value * std::exp(-u); };
  const double br[] = {0.0, 1e-6, 1e-3, 0.1, 1.0, 5.0, 37.0};
  auto r = quad::integrate_pieces(g, br, quad_options(tol));
  return -(hb / (2.0 * kPi * t)) * quad::require(r, "cut integral");
}

AmplitudeSeries survival_cut_integral(const Model& model, const std::vector<double>& times, const Tolerances& tol) {
  AmplitudeSeries s;
  s.method = Method::CutDecomposition;
  s.times = times;
  for (double t : times) s.amplitude.push_back(cut_amplitude(model, t, tol));
  survival_probability(s);
  return s;
}

Decomposition decompose(const Model& model, const Tolerances& tol) {
  require_half_rational(model, "decompose");
  Decomposition d;
  d.bound = bound_state(model, tol);
  d.poles = poles_with_weights(model, 64, tol);
  return d;
}

cplx pole_part(const Model& model, const Decomposition& parts, double t) {
  const double hb = model.hbar();
  cplx a = 0.0;
  if (parts.bound) a += parts.bound->weight0 * std::polar(1.0, -parts.bound->lambda0 * t / hb);
  for (const auto& p : parts.poles.poles) a += p.gamma * std::exp(-kI * p.lambda0 * t / hb);
  return a;
}

AmplitudeSeries survival_decomposed(const Model& model, const Decomposition& parts, const std::vector<double>& times,
                                    const Tolerances& tol) {
  require_half_rational(model, "survival_decomposed");
  AmplitudeSeries s;
  s.method = Method::CutDecomposition;
  s.times = times;
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("survival_decomposed: non-finite time");
    // the contour only closes for t > 0; A(0) = 1 and A(-t) = conj A(t)
    if (t == 0.0) {
      s.amplitude.push_back(1.0);
      continue;
    }
    const double u = std::abs(t);
    const cplx a = pole_part(model, parts, u) + cut_amplitude(model, u, tol);
    s.amplitude.push_back(t > 0.0 ? a : std::conj(a));
  }
  survival_probability(s);
  return s;
}

AmplitudeSeries survival_decomposed(const Model& model, const std::vector<double>& times, const Tolerances& tol) {
  return survival_decomposed(model, decompose(model, tol), times, tol);
}

double crossover_time(const Model& model, const Decomposition& parts, const Tolerances& tol) {
  if (parts.poles.poles.empty()) return 0.0;  // nothing exponential to overtake
  const auto& lead = parts.poles.poles.front();
  const double hb = model.hbar();
  const double rate = std::abs(lead.lambda0.imag()) / hb;
  const double lg = std::log(std::abs(lead.gamma));
  auto g = [&](double t) { return lg - rate * t - std::log(std::abs(cut_amplitude(model, t, tol))); };

  const double life = 1.0 / rate;
  double lo = 1e-2 * life;
  if (g(lo) <= 0.0) return lo;
  double hi = lo;
  bool found = false;
  for (int k = 0; k < 80; ++k) {
    hi = lo * 1.5;
    if (g(hi) <= 0.0) {
      found = true;
      break;
    }
    lo = hi;
  }
  if (!found) throw NumericError("crossover not bracketed");
  for (int it = 0; it < 60; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

TailFitReport tail_slope(const AmplitudeSeries& series, double t_lo, double t_hi) {
  if (!(t_lo > 0.0) || !(t_lo < t_hi)) throw DomainError("tail_slope: window must satisfy 0 < t_lo < t_hi");
  std::vector<double> lt, t, la;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double ti = series.times[i];
    const double a = std::abs(series.amplitude[i]);
    if (ti < t_lo || ti > t_hi || !(a > 0.0)) continue;
    t.push_back(ti);
    lt.push_back(std::log(ti));
    la.push_back(std::log(a));
  }
  const int n = static_cast<int>(t.size());
  if (n < 8) throw InsufficientDataError("tail_slope: fewer than 8 points in the window");

  struct Line {
    double slope, intercept, ssr, sxx;
  };
  auto fit = [&](const std::vector<double>& x) {
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
      mx += x[i];
      my += la[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (la[i] - my);
    }
    const double b = sxy / sxx;
    const double a = my - b * mx;
    double ssr = 0;
    for (int i = 0; i < n; ++i) {
      const double r = la[i] - a - b * x[i];
      ssr += r * r;
    }
    return Line{b, a, ssr, sxx};
  };
  const Line loglog = fit(lt);
  const Line loglin = fit(t);
  TailFitReport rep;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.points = n;
  rep.slope = loglog.slope;
  rep.slope_err = std::sqrt(loglog.ssr / (n - 2) / loglog.sxx);
  rep.exponential_rejected = loglog.ssr < loglin.ssr;
  return rep;
}

}  // namespace decaylab
