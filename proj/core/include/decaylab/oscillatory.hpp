#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace decaylab::osc {

constexpr int kPanelOrder = 16;

/// Legendre coefficients of a smooth function on [a, b].
struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::array<double, kPanelOrder> coef{};

  double centre() const noexcept { return 0.5 * (a + b); }
  double half_width() const noexcept { return 0.5 * (b - a); }
};

/// mu_k(theta) = int_{-1}^{1} P_k(u) exp(-i theta u) du for k < count.
std::vector<std::complex<double>> legendre_moments(double theta, int count);

/// Spherical Bessel functions j_0..j_{count-1} at x (any sign).
std::vector<double> spherical_bessel(double x, int count);

/// Piecewise-polynomial representation of a real weight w on [lo, hi], built
/// once and reused for every frequency (Filon-type). Each panel is bisected
/// until the trailing Legendre coefficients fall below `panel_tol`.
class FilonTransform {
 public:
  FilonTransform(const std::function<double(double)>& w, std::vector<double> breakpoints,
                 double panel_tol, int max_panels);

  /// int w(x) exp(-i omega x) dx over the covered range.
  std::complex<double> operator()(double omega) const;

  /// int w(x) dx (omega = 0, exact on the interpolant).
  double integral() const;

  /// sum_p |centre_p| * int_p |w|: sets the phase-precision horizon.
  double first_moment() const noexcept { return first_moment_; }

  const std::vector<Panel>& panels() const noexcept { return panels_; }

 private:
  std::vector<Panel> panels_;
  double first_moment_ = 0.0;
};

}  // namespace decaylab::osc
