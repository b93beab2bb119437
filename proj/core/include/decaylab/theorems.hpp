#pragma once

#include <string>
#include <vector>

#include "decaylab/profiles.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

struct TheoremCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_passed() const noexcept;
};

/// max_y |H[sigma](y) + eta(y)| over `points`, sigma itself by quadrature.
double involution_residual(const Model& model, const std::vector<double>& points, const Tolerances& tol = {});

/// |C(x + i eps) - (sigma(x) + i eta(x))| for each eps, C the Cauchy integral.
std::vector<double> boundary_value_residuals(const Model& model, double x, const std::vector<double>& eps,
                                             const Tolerances& tol = {});

/// max |C(z)| over the given lower-half-plane points.
double lower_half_plane_residual(const Model& model, const std::vector<cplx>& points, const Tolerances& tol = {});

/// max |sigma_tilde(x, y) - (sigma(x) - sigma(y)) / (x - y)| over the pairs.
double resolvent_identity_residual(const Model& model, const std::vector<std::pair<double, double>>& pairs,
                                   const Tolerances& tol = {});

/// max |-H[H[phi]](l) - phi(l)| for phi = exp(-x^2): the smeared form of
/// int P 1/(E-l) P 1/(E-l') dE = pi^2 delta(l - l').
double delta_identity_residual(const std::vector<double>& points, const Tolerances& tol = {});

/// max relative gap between the closed form and quadrature of sigma-bar for lambda < 0.
double closed_form_gap(const Model& model, const std::vector<double>& points, const Tolerances& tol = {});

/// The full suite with the default test points; half-line models run the
/// subset that applies to them.
TheoremReport run_theorems(const Model& model, const Tolerances& tol = {});

}  // namespace decaylab
