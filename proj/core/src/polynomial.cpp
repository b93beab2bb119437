#include "decaylab/polynomial.hpp"

#include <Eigen/Eigenvalues>

namespace decaylab {

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial{std::move(d)};
}

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n <= 0) return {};
  if (n == 1) return {cplx(-coeffs_[0] / coeffs_[1], 0.0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / coeffs_[n];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<cplx> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

namespace cpoly {

std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> p{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<cplx> taylor_shift(std::vector<cplx> p, cplx z0, int count) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<cplx> out(count, 0.0);
  for (int k = 0; k <= n && k < count; ++k) {
    for (int j = n - 1; j >= k; --j) p[j] += z0 * p[j + 1];
    out[k] = p[k];
  }
  return out;
}

cplx eval(const std::vector<cplx>& p, cplx z) noexcept {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace cpoly

}  // namespace decaylab
