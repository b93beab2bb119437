#pragma once

#include <functional>
#include <string>
#include <vector>

#include "decaylab/profiles.hpp"
#include "decaylab/quadrature.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

enum class Sheet { Physical, Continued };

/// Auto picks the closed rational(-log) form whenever the profile has one.
enum class TransformMethod { Auto, ClosedForm, Quadrature };

struct TransformValue {
  double sigma = 0.0;
  double eta_at = 0.0;
  double lambda = 0.0;
};

struct XiValue {
  cplx z;
  cplx value;
  Sheet sheet = Sheet::Physical;
};

inline quad::Options quad_options(const Tolerances& t) {
  return {t.quad_abs, t.quad_rel, t.quad_max_intervals};
}

/// PV int_a^b f(E)/(E - lambda) dE; a and/or b may be infinite. A symmetric
/// window around lambda is handled by singularity subtraction (its log term
/// vanishes). For lambda outside [a, b] this is an ordinary integral.
/// `features` are points where f has structure (peaks); they become breakpoints
/// so the adaptive rule cannot step over them.
double pv_integral(const std::function<double(double)>& f, double lambda, double a, double b,
                   const quad::Options& opt = {}, const std::vector<double>& features = {});

/// Breakpoint hints for integrals of eta: pole real parts and a few widths around them.
std::vector<double> eta_features(const Model& model);

/// sigma(lambda) = (1/pi) PV int eta(E)/(E - lambda) dE over the full line.
TransformValue hilbert_full(const Model& model, double lambda, TransformMethod method = TransformMethod::Auto,
                            const Tolerances& tol = {});

/// sigma-bar(lambda) = (1/pi) PV int_0^inf eta(E)/(E - lambda) dE. lambda = 0 is a DomainError.
TransformValue hilbert_half(const Model& model, double lambda, TransformMethod method = TransformMethod::Auto,
                            const Tolerances& tol = {});

/// (1/pi) int_0^inf eta(E)/(E - lambda)^2 dE for lambda < 0. Auto means quadrature here.
double hilbert_half_deriv(const Model& model, double lambda, TransformMethod method = TransformMethod::Auto,
                          const Tolerances& tol = {});

/// The support-appropriate transform (hilbert_full or hilbert_half).
TransformValue hilbert(const Model& model, double lambda, TransformMethod method = TransformMethod::Auto,
                       const Tolerances& tol = {});

/// xi on the physical sheet (the Cauchy integral: xi_c above the axis, 0
/// below; half line: the transform of eta*theta, cut along [0, inf)) or its
/// continuation into the lower half plane. Real z gives the boundary value
/// sigma + i eta from above.
XiValue xi_eval(const Model& model, cplx z, Sheet sheet, TransformMethod method = TransformMethod::Auto,
                const Tolerances& tol = {});

/// d/dz of the continued xi (full line), or of the right-sheet continuation
/// across the positive axis (half line, Im z < 0).
cplx xi_continued_derivative(const Model& model, cplx z);

/// (1/2 pi i) int (sigma(x) + i eta(x)) / (x - z) dx by quadrature. Full line,
/// decaying profiles only.
cplx cauchy_integral(const Model& model, cplx z, const Tolerances& tol = {});

/// (1/pi) PV PV int eta(z) / ((z - x)(z - y)) dz by iterated singularity subtraction.
double sigma_tilde(const Model& model, double x, double y, const Tolerances& tol = {});

namespace halfline {

/// Physical transform (1/pi) int_0^inf eta(E)/(E - z) dE in closed form,
/// analytic off [0, inf); real positive z gives the value from above.
cplx xi_physical(const Model& model, cplx z);
cplx xi_physical_derivative(const Model& model, cplx z);

/// Log(-z) on the physical sheet (principal), from above on the positive axis.
cplx log_physical(cplx z);

/// Log(-z) continued across the positive axis from above (Log(-z) - 2 pi i below the axis).
cplx log_right(cplx z);

/// The regular part A(z, c) = pi xi(z) + eta(z) Log(-z/c), analytic near the cut.
cplx regular_part(const Model& model, cplx z);

}  // namespace halfline

}  // namespace decaylab
