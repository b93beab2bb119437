#include "decaylab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "decaylab/errors.hpp"
#include "decaylab/pvcalc.hpp"
#include "decaylab/quadrature.hpp"
#include "decaylab/spectral.hpp"

#include <lapacke.h>

namespace decaylab {

DiscretizedModel discretize(const Model& model, int n, double e_max, const Tolerances& tol) {
  if (n < 2) throw DomainError("discretize: n must be >= 2");
  if (!(e_max > 0) || !std::isfinite(e_max)) throw DomainError("discretize: e_max must be positive");

  // Full line: centre the window on alpha so a truncated flat band keeps zero level shift.
  const double lo = model.half_line() ? 0.0 : model.alpha() - e_max;
  const double hi = model.half_line() ? e_max : model.alpha() + e_max;

  DiscretizedModel dm;
  dm.alpha = model.alpha();
  dm.hbar = model.hbar();
  const auto gl = quad::gauss_legendre(n, lo, hi);
  dm.nodes = gl.nodes;
  dm.weights = gl.weights;
  dm.couplings.resize(n);
  for (int i = 0; i < n; ++i) dm.couplings[i] = std::sqrt(model.eta(dm.nodes[i]) * dm.weights[i]);

  auto w = [&](double l) { return continuum_weight(model, l, tol); };
  const double inf = std::numeric_limits<double>::infinity();
  auto opt = quad_options(tol);
  double outside = quad::integrate(w, hi, inf, opt).value;
  if (!model.half_line()) outside += quad::integrate(w, -inf, lo, opt).value;
  if (outside > tol.completeness)
    dm.diagnostics.push_back("cutoff warning: continuum weight beyond the window is " + std::to_string(outside));
  return dm;
}

Eigen::MatrixXd hamiltonian(const DiscretizedModel& dm) {
  const int d = dm.dim();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  h(0, 0) = dm.alpha;
  for (int i = 1; i < d; ++i) {
    h(i, i) = dm.nodes[i - 1];
    h(0, i) = dm.couplings[i - 1];
    h(i, 0) = dm.couplings[i - 1];
  }
  return h;
}

EigenPairs diagonalize(const DiscretizedModel& dm) {
  // Divide and conquer (LAPACK dsyevd); arrowhead matrices deflate heavily.
  Eigen::MatrixXd h = hamiltonian(dm);
  const int d = dm.dim();
  Eigen::VectorXd w(d);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', d, h.data(), d, w.data());
  if (info != 0)
    throw NumericError("dsyevd failed with info " + std::to_string(info) + " (dim " + std::to_string(d) + ")");
  EigenPairs out;
  out.values = std::move(w);
  out.vectors = std::move(h);
  out.overlap.resize(dm.dim());
  for (int k = 0; k < dm.dim(); ++k) out.overlap[k] = out.vectors(0, k) * out.vectors(0, k);

  // H V - V Lambda using the arrowhead structure (O(n^2)).
  const Eigen::MatrixXd& v = out.vectors;
  Eigen::MatrixXd r(dm.dim(), dm.dim());
  const int n = dm.dim() - 1;
  Eigen::Map<const Eigen::VectorXd> c(dm.couplings.data(), n);
  Eigen::Map<const Eigen::VectorXd> e(dm.nodes.data(), n);
  r.row(0) = dm.alpha * v.row(0) + c.transpose() * v.bottomRows(n);
  r.bottomRows(n) = e.asDiagonal() * v.bottomRows(n) + c * v.row(0);
  r -= v * out.values.asDiagonal();
  out.residual = r.norm();
  return out;
}

AmplitudeSeries survival_discrete(const DiscretizedModel& dm, const EigenPairs& eig, const std::vector<double>& times) {
  AmplitudeSeries s;
  s.method = Method::Oracle;
  s.times = times;
  s.amplitude.reserve(times.size());
  for (double t : times) {
    cplx a = 0.0;
    for (int k = 0; k < eig.values.size(); ++k) a += eig.overlap[k] * std::polar(1.0, -eig.values[k] * t / dm.hbar);
    s.amplitude.push_back(a);
  }
  survival_probability(s);
  return s;
}

double recurrence_time(const DiscretizedModel& dm) {
  std::vector<double> gaps;
  for (std::size_t i = 1; i < dm.nodes.size(); ++i) gaps.push_back(dm.nodes[i] - dm.nodes[i - 1]);
  if (gaps.empty()) return std::numeric_limits<double>::infinity();
  std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
  return 2.0 * std::numbers::pi * dm.hbar / gaps[gaps.size() / 2];
}

}  // namespace decaylab
