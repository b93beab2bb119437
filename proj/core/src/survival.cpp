#include "decaylab/survival.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "decaylab/errors.hpp"
#include "decaylab/pvcalc.hpp"

namespace decaylab {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
AmplitudeSeries tabulate(const std::vector<double>& times, Method method, F&& amplitude_at_nonneg) {
  AmplitudeSeries s;
  s.method = method;
  s.times = times;
  s.amplitude.reserve(times.size());
  for (double t : times) {
    // Negative times by conjugation.
    const cplx a = amplitude_at_nonneg(std::abs(t));
    s.amplitude.push_back(t < 0 ? std::conj(a) : a);
  }
  survival_probability(s);
  return s;
}

double max_abs_time(const std::vector<double>& times) {
  double m = 0.0;
  for (double t : times) m = std::max(m, std::abs(t));
  return m;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::FlatClosed: return "flat_closed";
    case Method::Quadrature: return "quadrature";
    case Method::GoldenRule: return "golden_rule";
    case Method::PoleSum: return "pole_sum";
    case Method::Oracle: return "oracle";
    case Method::CutDecomposition: return "cut_decomposition";
  }
  return "?";
}

std::vector<double> linear_grid(double t0, double t1, int n) {
  if (!(t0 < t1) || n < 2) throw DomainError("linear grid needs t0 < t1 and n >= 2");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t0 + (t1 - t0) * i / (n - 1);
  g.back() = t1;
  return g;
}

std::vector<double> log_grid(double t0, double t1, int n) {
  if (!(t0 > 0) || !(t0 < t1) || n < 2) throw DomainError("log grid needs 0 < t0 < t1 and n >= 2");
  std::vector<double> g(n);
  const double l0 = std::log(t0);
  const double l1 = std::log(t1);
  for (int i = 0; i < n; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  g.front() = t0;
  g.back() = t1;
  return g;
}

AmplitudeSeries survival_flat_closed(const Model& model, const std::vector<double>& times) {
  if (!model.flat()) throw WrongModelError("survival_flat_closed requires a flat profile");
  const double a = model.alpha();
  const double g = kPi * model.flat_density();
  const double hb = model.hbar();
  return tabulate(times, Method::FlatClosed, [&](double t) { return std::polar(std::exp(-g * t / hb), -a * t / hb); });
}

ContinuumAmplitude::ContinuumAmplitude(const Model& model, const Tolerances& tol) : hbar_(model.hbar()) {
  const double scale = model.energy_scale();
  const double R = 1e12 * scale;
  const double lo = model.half_line() ? 0.0 : -R;

  std::vector<double> br{lo, R};
  for (const auto& f : weight_features(model, tol)) {
    if (f.centre > lo && f.centre < R) br.push_back(f.centre);
    for (double step = f.width; step < R; step *= 2.0)
      for (double x : {f.centre - step, f.centre + step})
        if (x > lo && x < R) br.push_back(x);
  }
  if (model.half_line()) {
    // Log-type behaviour of the weight at threshold.
    for (double x = scale; x > 1e-12 * scale; x *= 0.25) br.push_back(x);
    bound_ = bound_state(model, tol);
  }

  auto w = [&](double l) { return continuum_weight(model, l, tol); };
  transform_ = std::make_shared<osc::FilonTransform>(w, br, tol.panel, tol.max_panels);

  const double eps = std::numeric_limits<double>::epsilon();
  const double m1 = std::max(transform_->first_moment(), eps);
  horizon_ = tol.transform * hbar_ / (eps * m1);
}

cplx ContinuumAmplitude::continuum(double t) const { return (*transform_)(t / hbar_); }

cplx ContinuumAmplitude::operator()(double t) const {
  cplx a = continuum(t);
  if (bound_) a += bound_->weight0 * std::polar(1.0, -bound_->lambda0 * t / hbar_);
  return a;
}

AmplitudeSeries survival_quadrature(const Model& model, const std::vector<double>& times, const Tolerances& tol) {
  const ContinuumAmplitude amp(model, tol);
  const double tmax = max_abs_time(times);
  if (tmax > amp.horizon())
    throw ResolutionError("max |t| = " + std::to_string(tmax) + " exceeds the resolvable horizon " +
                              std::to_string(amp.horizon()),
                          amp.horizon());
  return tabulate(times, Method::Quadrature, [&](double t) { return amp(t); });
}

AmplitudeSeries survival_golden_rule(const Model& model, const std::vector<double>& times, const Tolerances& tol) {
  const double a = model.alpha();
  if (model.half_line() && !(a > 0.0)) throw DomainError("golden rule: eta(alpha) = 0, no first-order decay");
  const auto t = hilbert(model, a, TransformMethod::Auto, tol);
  if (!(t.eta_at > 0.0)) throw DomainError("golden rule: eta(alpha) = 0, no first-order decay");
  const cplx energy(a - kPi * t.sigma, -kPi * t.eta_at);
  const double hb = model.hbar();
  return tabulate(times, Method::GoldenRule, [&](double s) { return std::exp(cplx(0, -1) * energy * s / hb); });
}

AmplitudeSeries survival_pole_sum(const Model& model, const PoleSet& poles, const std::vector<double>& times) {
  if (poles.poles.empty()) throw NumericError("survival_pole_sum: empty pole set");
  const double hb = model.hbar();
  return tabulate(times, Method::PoleSum, [&](double t) {
    cplx a = 0.0;
    for (const auto& p : poles.poles) a += p.gamma * std::exp(cplx(0, -1) * p.lambda0 * t / hb);
    return a;
  });
}

AmplitudeSeries& survival_probability(AmplitudeSeries& series) {
  series.survival.resize(series.amplitude.size());
  for (std::size_t i = 0; i < series.amplitude.size(); ++i) series.survival[i] = std::norm(series.amplitude[i]);
  return series;
}

RateFit fit_decay_rate(const AmplitudeSeries& series, double w_lo, double w_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double w = series.survival[i];
    if (w < w_lo || w > w_hi) continue;
    const double x = series.times[i];
    const double y = std::log(w);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw InsufficientDataError("fit_decay_rate: fewer than two points with W in the window");
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw InsufficientDataError("fit_decay_rate: degenerate time window");
  const double slope = (n * sxy - sx * sy) / den;
  return {-slope, (sy - slope * sx) / n, n};
}

}  // namespace decaylab
