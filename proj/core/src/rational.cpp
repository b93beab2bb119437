#include "decaylab/rational.hpp"

#include <algorithm>
#include <cmath>

namespace decaylab {

namespace {

struct Cluster {
  cplx center;
  int multiplicity;
};

std::vector<Cluster> cluster_roots(const std::vector<cplx>& roots) {
  std::vector<Cluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int count = 1;
    used[i] = true;
    const double radius = 1e-5 * std::max(1.0, std::abs(roots[i]));
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= radius) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    cplx center = sum / static_cast<double>(count);
    // Real-coefficient denominators: snap numerically real roots onto the axis.
    if (std::abs(center.imag()) <= 1e-13 * std::max(1.0, std::abs(center))) center.imag(0.0);
    clusters.push_back({center, count});
  }
  return clusters;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den, double scale)
    : num_(std::move(num)),
      den_(std::move(den)),
      dnum_(num_.derivative()),
      dden_(den_.derivative()),
      scale_(scale) {
  if (!strictly_proper() || num_.degree() < 0) return;

  const auto clusters = cluster_roots(den_.roots());
  std::vector<cplx> numerator_c(num_.coefficients().begin(), num_.coefficients().end());

  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const Cluster& pole = clusters[k];
    std::vector<cplx> others;
    for (std::size_t l = 0; l < clusters.size(); ++l) {
      if (l == k) continue;
      for (int m = 0; m < clusters[l].multiplicity; ++m) others.push_back(clusters[l].center);
    }
    std::vector<cplx> rest = cpoly::from_roots(others);
    for (cplx& c : rest) c *= den_.leading();

    // (z - q)^m * num/den = P(z)/R(z); its Taylor coefficients at q give the Laurent tail.
    const int m = pole.multiplicity;
    const auto p = cpoly::taylor_shift(numerator_c, pole.center, m);
    const auto r = cpoly::taylor_shift(rest, pole.center, m);
    std::vector<cplx> h(m);
    for (int n = 0; n < m; ++n) {
      cplx acc = p[n];
      for (int j = 1; j <= n; ++j) acc -= r[j] * h[n - j];
      h[n] = acc / r[0];
    }
    PoleTerm term{pole.center, std::vector<cplx>(m)};
    for (int j = 1; j <= m; ++j) term.laurent[j - 1] = scale_ * h[m - j];
    poles_.push_back(std::move(term));
  }
}

double RationalFunction::operator()(double x) const noexcept { return scale_ * num_(x) / den_(x); }

cplx RationalFunction::operator()(cplx z) const noexcept { return scale_ * num_(z) / den_(z); }

cplx RationalFunction::derivative(cplx z) const noexcept {
  const cplx d = den_(z);
  return scale_ * (dnum_(z) * d - num_(z) * dden_(z)) / (d * d);
}

cplx RationalFunction::pole_sum(const std::vector<PoleTerm>& poles, cplx z) noexcept {
  cplx acc = 0.0;
  for (const PoleTerm& p : poles) {
    const cplx inv = 1.0 / (z - p.location);
    cplx power = inv;
    for (const cplx& c : p.laurent) {
      acc += c * power;
      power *= inv;
    }
  }
  return acc;
}

cplx RationalFunction::pole_sum_derivative(const std::vector<PoleTerm>& poles, cplx z) noexcept {
  cplx acc = 0.0;
  for (const PoleTerm& p : poles) {
    const cplx inv = 1.0 / (z - p.location);
    cplx power = inv * inv;
    for (std::size_t j = 0; j < p.laurent.size(); ++j) {
      acc -= static_cast<double>(j + 1) * p.laurent[j] * power;
      power *= inv;
    }
  }
  return acc;
}

}  // namespace decaylab
