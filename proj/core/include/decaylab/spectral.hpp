#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decaylab/profiles.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

struct BoundState {
  double lambda0 = 0.0;
  double weight0 = 0.0;
};

struct ResonancePole {
  cplx lambda0;
  cplx gamma;
};

struct PoleSet {
  std::vector<ResonancePole> poles;
  std::vector<std::string> failures;  // seeds whose Newton iteration did not converge

  cplx gamma_sum() const noexcept;
};

struct SpectralData {
  std::vector<double> lambda;
  std::vector<double> weight;
  std::optional<BoundState> bound_state;
  double completeness_residual = 0.0;
};

/// |<a|lambda>|^2 = eta / ((alpha - lambda - pi sigma)^2 + pi^2 eta^2).
double continuum_weight(const Model& model, double lambda, const Tolerances& tol = {});

/// pi * sigma-bar(0-), the largest alpha admitting a bound state
/// (+inf when eta(0) > 0). Computed as int_0^inf eta(E)/E dE.
double bound_threshold(const Model& model, const Tolerances& tol = {});

/// Half line only. Bisection on alpha - lambda - pi sigma-bar(lambda) over
/// [-Lambda, -eps]; nullopt when alpha is above the threshold.
std::optional<BoundState> bound_state(const Model& model, const Tolerances& tol = {});

/// Roots of alpha - z - pi xi(z) = 0 below the axis by seeded Newton
/// iteration on the continued xi. Half line: the continuation across the
/// positive axis, keeping roots with Re > 0; there the seeds are backed by a
/// lattice sweep checked against an argument-principle count. Sorted by |Im|
/// ascending; gammas are left at zero (see pole_weights).
PoleSet resonance_poles(const Model& model, int max_poles = 32, const Tolerances& tol = {});

/// gamma = 1 / (1 + pi xi'(lambda0)). Throws DegenerateRootError on double roots.
PoleSet pole_weights(const Model& model, PoleSet poles, const Tolerances& tol = {});

/// resonance_poles followed by pole_weights.
PoleSet poles_with_weights(const Model& model, int max_poles = 32, const Tolerances& tol = {});

/// Integral of the continuum weight over the support (adaptive quadrature).
double continuum_mass(const Model& model, const Tolerances& tol = {});

/// | int w + weight0 - 1 |.
double completeness(const Model& model, const Tolerances& tol = {});

/// Weight tabulated on `grid` (points outside the support are skipped), with
/// bound state and completeness residual.
SpectralData spectrum(const Model& model, const std::vector<double>& grid, const Tolerances& tol = {});

/// Points where the weight varies quickly: alpha, the Golden-Rule energy,
/// resonance real parts and eta pole real parts, each with a characteristic
/// width. Used to seed quadrature breakpoints.
struct Feature {
  double centre;
  double width;
};
std::vector<Feature> weight_features(const Model& model, const Tolerances& tol = {});

}  // namespace decaylab
