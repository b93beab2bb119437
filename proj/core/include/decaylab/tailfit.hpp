#pragma once

#include <optional>
#include <vector>

#include "decaylab/profiles.hpp"
#include "decaylab/pvcalc.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/survival.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

struct CutJump {
  double mu = 0.0;
  cplx value;
};

struct TailFitReport {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double slope = 0.0;      // d ln|A| / d ln t
  double slope_err = 0.0;  // standard error of the slope
  bool exponential_rejected = false;
  int points = 0;
};

/// Resolvent 1/(alpha - z - pi xi(z)) on the physical sheet or on the
/// continuation across the positive axis (half line).
cplx resolvent(const Model& model, cplx z, Sheet sheet);

/// F(-i mu): continued-sheet resolvent minus physical-sheet resolvent, in a
/// form that stays finite at poles of eta. `swap` exchanges the two branches.
CutJump cut_jump(const Model& model, double mu, bool swap = false);

/// -(1/2 pi) int_0^inf F(-i mu) exp(-mu t / hbar) d mu, t > 0.
cplx cut_amplitude(const Model& model, double t, const Tolerances& tol = {});
AmplitudeSeries survival_cut_integral(const Model& model, const std::vector<double>& times, const Tolerances& tol = {});

/// Inputs of the contour decomposition (bound state and passed poles).
struct Decomposition {
  std::optional<BoundState> bound;
  PoleSet poles;
};
Decomposition decompose(const Model& model, const Tolerances& tol = {});

/// w0 e^{-i l0 t} + sum gamma e^{-i l t} + cut(t) for t > 0; t < 0 by
/// conjugation and A(0) = 1 exactly.
AmplitudeSeries survival_decomposed(const Model& model, const std::vector<double>& times, const Tolerances& tol = {});
AmplitudeSeries survival_decomposed(const Model& model, const Decomposition& parts, const std::vector<double>& times,
                                    const Tolerances& tol = {});

/// Pole-only part of the decomposition (bound term + resonance terms).
cplx pole_part(const Model& model, const Decomposition& parts, double t);

/// Time where the leading resonance term |gamma| e^{-|Im l| t / hbar} meets |cut(t)|.
double crossover_time(const Model& model, const Decomposition& parts, const Tolerances& tol = {});

/// Least-squares slope of ln|A| against ln t over [t_lo, t_hi] (>= 8 points),
/// compared with a ln|A| against t fit.
TailFitReport tail_slope(const AmplitudeSeries& series, double t_lo, double t_hi);

}  // namespace decaylab
