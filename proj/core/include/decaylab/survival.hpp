#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "decaylab/oscillatory.hpp"
#include "decaylab/profiles.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

enum class Method { FlatClosed, Quadrature, GoldenRule, PoleSum, Oracle, CutDecomposition };

std::string to_string(Method m);

struct AmplitudeSeries {
  std::vector<double> times;
  std::vector<cplx> amplitude;
  std::vector<double> survival;
  Method method = Method::Quadrature;

  std::size_t size() const noexcept { return times.size(); }
};

std::vector<double> linear_grid(double t0, double t1, int n);
std::vector<double> log_grid(double t0, double t1, int n);

/// exp(-i t alpha / hbar) exp(-pi eta t / hbar). Flat profiles only.
AmplitudeSeries survival_flat_closed(const Model& model, const std::vector<double>& times);

/// The spectral integral int w(l) exp(-i l t / hbar) dl (+ bound term),
/// evaluated with a Filon-type panel rule built once per model.
class ContinuumAmplitude {
 public:
  explicit ContinuumAmplitude(const Model& model, const Tolerances& tol = {});

  /// Continuum part only (no bound term), t of either sign.
  cplx continuum(double t) const;
  /// Full amplitude including the bound-state term.
  cplx operator()(double t) const;

  /// Largest |t| for which phase round-off stays below tol.transform.
  double horizon() const noexcept { return horizon_; }
  double mass() const { return transform_->integral(); }
  std::size_t panel_count() const noexcept { return transform_->panels().size(); }
  const std::optional<BoundState>& bound() const noexcept { return bound_; }

 private:
  double hbar_;
  double horizon_ = 0.0;
  std::optional<BoundState> bound_;
  std::shared_ptr<osc::FilonTransform> transform_;
};

/// Throws ResolutionError when max |t| exceeds the achievable horizon.
AmplitudeSeries survival_quadrature(const Model& model, const std::vector<double>& times, const Tolerances& tol = {});

/// exp(-i t [alpha - pi sigma(alpha) - i pi eta(alpha)] / hbar).
AmplitudeSeries survival_golden_rule(const Model& model, const std::vector<double>& times, const Tolerances& tol = {});

/// sum gamma exp(-i lambda0 t / hbar).
AmplitudeSeries survival_pole_sum(const Model& model, const PoleSet& poles, const std::vector<double>& times);

/// survival = |amplitude|^2, in place. Idempotent.
AmplitudeSeries& survival_probability(AmplitudeSeries& series);

struct RateFit {
  double rate = 0.0;       // -d ln W / dt
  double intercept = 0.0;  // ln W at t = 0
  int points = 0;
};

/// Least squares on ln W over the points with W in [w_lo, w_hi].
RateFit fit_decay_rate(const AmplitudeSeries& series, double w_lo = 0.1, double w_hi = 0.9);

}  // namespace decaylab
