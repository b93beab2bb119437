#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "decaylab/errors.hpp"

namespace decaylab::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_intervals = 4000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// 21-point Kronrod rule with embedded 10-point Gauss rule on [-1, 1]
/// (positive half, index 0 is the centre).
struct KronrodTable {
  std::array<double, 11> x;
  std::array<double, 11> wk;
  std::array<double, 11> wg;  // zero where the node is not a Gauss node
};
const KronrodTable& kronrod21();

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
auto gk21(F& f, double a, double b) {
  using T = decltype(f(0.0));
  const auto& tab = kronrod21();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  if (!std::isfinite(magnitude(fc))) throw NumericError("non-finite integrand sample at " + std::to_string(c));
  T k = fc * tab.wk[0];
  T g = fc * tab.wg[0];
  for (std::size_t i = 1; i < tab.x.size(); ++i) {
    const double dx = h * tab.x[i];
    T fp = f(c + dx);
    T fm = f(c - dx);
    if (!std::isfinite(magnitude(fp)) || !std::isfinite(magnitude(fm)))
      throw NumericError("non-finite integrand sample near " + std::to_string(c));
    k += (fp + fm) * tab.wk[i];
    g += (fp + fm) * tab.wg[i];
  }
  k *= h;
  g *= h;
  return Segment<T>{a, b, k, magnitude(k - g)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod over a finite interval. Bisects the segment
/// with the largest error estimate until the total error estimate is below
/// max(abs_tol, rel_tol * |I|). Deterministic.
template <class F>
auto integrate_finite(F&& f, double a, double b, const Options& opt = {}) {
  using T = decltype(f(0.0));
  Result<T> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment<T>> heap;
  auto first = detail::gk21(f, a, b);
  T total = first.value;
  double err = first.error;
  heap.push(first);
  int count = 1;
  std::vector<detail::Segment<T>> frozen;
  while (!heap.empty()) {
    if (err <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
      out.converged = true;
      break;
    }
    if (count >= opt.max_intervals) break;
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() * std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Cannot split further; keep its error, stop refining it.
      frozen.push_back(worst);
      if (heap.empty()) break;
      continue;
    }
    auto left = detail::gk21(f, worst.a, mid);
    auto right = detail::gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum to remove accumulated update round-off.
  T sum{};
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  for (const auto& s : frozen) {
    sum += s.value;
    esum += s.error;
  }
  out.value = sum;
  out.error = esum;
  out.intervals = count;
  if (!out.converged) out.converged = esum <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(sum));
  return out;
}

/// Adaptive integral over [a, b] where either end may be infinite. Infinite
/// ends are mapped with E = a + L (1 - s) / s, which is exact for integrands
/// decaying at least like 1/E^2.
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) {
  using T = decltype(f(0.0));
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (!lo_inf && !hi_inf) return integrate_finite(f, a, b, opt);
  if (lo_inf && hi_inf) {
    auto left = integrate(f, -std::numeric_limits<double>::infinity(), 0.0, opt);
    auto right = integrate(f, 0.0, std::numeric_limits<double>::infinity(), opt);
    Result<T> r;
    r.value = left.value + right.value;
    r.error = left.error + right.error;
    r.intervals = left.intervals + right.intervals;
    r.converged = left.converged && right.converged;
    return r;
  }
  if (hi_inf) {
    const double scale = std::max(1.0, std::abs(a));
    auto g = [&](double s) -> T {
      const double e = a + scale * (1.0 - s) / s;
      return f(e) * (scale / (s * s));
    };
    return integrate_finite(g, 0.0, 1.0, opt);
  }
  const double scale = std::max(1.0, std::abs(b));
  auto g = [&](double s) -> T {
    const double e = b - scale * (1.0 - s) / s;
    return f(e) * (scale / (s * s));
  };
  return integrate_finite(g, 0.0, 1.0, opt);
}

/// Sum of integrals over consecutive breakpoints (which may start/end at +-inf).
template <class F>
auto integrate_pieces(F&& f, std::span<const double> breakpoints, const Options& opt = {}) {
  using T = decltype(f(0.0));
  Result<T> r;
  r.converged = true;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) continue;
    auto part = integrate(f, breakpoints[i], breakpoints[i + 1], opt);
    r.value += part.value;
    r.error += part.error;
    r.intervals += part.intervals;
    r.converged = r.converged && part.converged;
  }
  return r;
}

/// Throws NumericError naming `what` when the estimate did not converge.
template <class T>
T require(const Result<T>& r, const char* what) {
  if (!r.converged)
    throw NumericError(std::string("quadrature did not converge: ") + what + " (error estimate " +
                       std::to_string(r.error) + ")");
  return r.value;
}

/// Gauss-Legendre rule, nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n);

/// n-point rule mapped linearly onto [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace decaylab::quad
