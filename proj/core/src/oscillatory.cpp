#include "decaylab/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decaylab/errors.hpp"
#include "decaylab/quadrature.hpp"

namespace decaylab::osc {

namespace {

struct NodeTable {
  std::array<double, kPanelOrder> x{};
  std::array<double, kPanelOrder> w{};
  // p[k][j] = P_k(x_j) * (2k+1)/2 * w_j, the discrete Legendre transform.
  std::array<std::array<double, kPanelOrder>, kPanelOrder> t{};
};

const NodeTable& nodes() {
  static const NodeTable table = [] {
    NodeTable n;
    auto gl = quad::gauss_legendre(kPanelOrder);
    for (int j = 0; j < kPanelOrder; ++j) {
      n.x[j] = gl.nodes[j];
      n.w[j] = gl.weights[j];
      double p0 = 1.0;
      double p1 = n.x[j];
      for (int k = 0; k < kPanelOrder; ++k) {
        double pk;
        if (k == 0) {
          pk = 1.0;
        } else if (k == 1) {
          pk = n.x[j];
        } else {
          pk = ((2.0 * k - 1.0) * n.x[j] * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        n.t[k][j] = pk * (2.0 * k + 1.0) / 2.0 * n.w[j];
      }
    }
    return n;
  }();
  return table;
}

bool fit_panel(const std::function<double(double)>& w, double a, double b, double tol, Panel& out,
               double& abs_mass) {
  const auto& n = nodes();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, kPanelOrder> f{};
  abs_mass = 0.0;
  for (int j = 0; j < kPanelOrder; ++j) {
    f[j] = w(c + h * n.x[j]);
    if (!std::isfinite(f[j])) throw NumericError("non-finite weight sample at " + std::to_string(c + h * n.x[j]));
    abs_mass += n.w[j] * std::abs(f[j]);
  }
  abs_mass *= h;
  out.a = a;
  out.b = b;
  for (int k = 0; k < kPanelOrder; ++k) {
    double s = 0.0;
    for (int j = 0; j < kPanelOrder; ++j) s += n.t[k][j] * f[j];
    out.coef[k] = s;
  }
  const double tail = 2.0 * h * (std::abs(out.coef[kPanelOrder - 2]) + std::abs(out.coef[kPanelOrder - 1]));
  return tail <= tol;
}

}  // namespace

std::vector<double> spherical_bessel(double x, int count) {
  std::vector<double> j(count, 0.0);
  if (count <= 0) return j;
  const double ax = std::abs(x);
  if (ax < 1e-300) {
    j[0] = 1.0;
    return j;
  }
  if (ax < 1.0) {
    // Power series: j_k = x^k/(2k+1)!! * sum_m (-x^2/2)^m / (m! (2k+3)(2k+5)...(2k+2m+1)).
    double lead = 1.0;
    for (int k = 0; k < count; ++k) {
      double term = 1.0;
      double sum = 1.0;
      for (int m = 1; m < 30; ++m) {
        term *= -0.5 * ax * ax / (m * (2.0 * k + 2.0 * m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
      }
      j[k] = lead * sum;
      lead *= ax / (2.0 * k + 3.0);
    }
    if (x < 0)
      for (int k = 1; k < count; k += 2) j[k] = -j[k];
    return j;
  }
  const double s = std::sin(ax);
  const double c = std::cos(ax);
  const double j0 = s / ax;
  const double j1 = s / (ax * ax) - c / ax;
  if (ax > 2.0 * count) {
    // Upward recurrence is stable for k < x.
    j[0] = j0;
    if (count > 1) j[1] = j1;
    for (int k = 1; k + 1 < count; ++k) j[k + 1] = (2.0 * k + 1.0) / ax * j[k] - j[k - 1];
  } else {
    // Miller: downward from well above max(count, x), then normalise.
    const int top = count + 20 + static_cast<int>(ax);
    double up = 0.0;
    double cur = 1e-30;
    std::vector<double> all(top + 1, 0.0);
    all[top] = cur;
    for (int k = top; k >= 1; --k) {
      const double down = (2.0 * k + 1.0) / ax * cur - up;
      up = cur;
      cur = down;
      all[k - 1] = cur;
      if (std::abs(cur) > 1e200) {
        for (int m = k - 1; m <= top; ++m) all[m] *= 1e-200;
        up *= 1e-200;
        cur *= 1e-200;
      }
    }
    // Normalise with whichever closed form is better conditioned.
    const double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / all[0] : j1 / all[1];
    for (int k = 0; k < count; ++k) j[k] = all[k] * scale;
  }
  if (x < 0)
    for (int k = 1; k < count; k += 2) j[k] = -j[k];
  return j;
}

std::vector<std::complex<double>> legendre_moments(double theta, int count) {
  const auto jb = spherical_bessel(theta, count);
  std::vector<std::complex<double>> mu(count);
  // (-i)^k cycles 1, -i, -1, i.
  static const std::complex<double> phase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  for (int k = 0; k < count; ++k) mu[k] = 2.0 * phase[k % 4] * jb[k];
  return mu;
}

FilonTransform::FilonTransform(const std::function<double(double)>& w, std::vector<double> breakpoints,
                               double panel_tol, int max_panels) {
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  if (breakpoints.size() < 2) throw DomainError("FilonTransform: need at least two breakpoints");

  // Depth-first refinement keeps the panel order deterministic and ascending.
  struct Todo {
    double a, b;
  };
  std::vector<Todo> stack;
  for (std::size_t i = breakpoints.size() - 1; i > 0; --i) stack.push_back({breakpoints[i - 1], breakpoints[i]});
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    Panel p;
    double mass = 0.0;
    const double mid = 0.5 * (a + b);
    const bool tiny = !(mid > a && mid < b) || (b - a) <= 1e-14 * std::max(1.0, std::abs(mid));
    if (fit_panel(w, a, b, panel_tol, p, mass) || tiny) {
      panels_.push_back(p);
      first_moment_ += std::abs(p.centre()) * mass;
      if (static_cast<int>(panels_.size()) > max_panels)
        throw ResolutionError("oscillatory panel budget exhausted (" + std::to_string(max_panels) + " panels)", 0.0);
      continue;
    }
    stack.push_back({mid, b});
    stack.push_back({a, mid});
    if (static_cast<int>(panels_.size() + stack.size()) > max_panels)
      throw ResolutionError("oscillatory panel budget exhausted (" + std::to_string(max_panels) + " panels)", 0.0);
  }
}

std::complex<double> FilonTransform::operator()(double omega) const {
  std::complex<double> total = 0.0;
  for (const auto& p : panels_) {
    const double h = p.half_width();
    const auto mu = legendre_moments(omega * h, kPanelOrder);
    std::complex<double> s = 0.0;
    for (int k = 0; k < kPanelOrder; ++k) s += p.coef[k] * mu[k];
    total += h * std::polar(1.0, -omega * p.centre()) * s;
  }
  return total;
}

double FilonTransform::integral() const {
  double total = 0.0;
  for (const auto& p : panels_) total += 2.0 * p.half_width() * p.coef[0];
  return total;
}

}  // namespace decaylab::osc
