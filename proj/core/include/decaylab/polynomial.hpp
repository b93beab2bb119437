#pragma once

#include <complex>
#include <vector>

namespace decaylab {

using cplx = std::complex<double>;

/// Real polynomial with coefficients in ascending power order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  double leading() const { return coeffs_.back(); }

  double operator()(double x) const noexcept;
  cplx operator()(cplx z) const noexcept;

  Polynomial derivative() const;

  /// All complex roots (companion-matrix eigenvalues), unordered.
  std::vector<cplx> roots() const;

 private:
  std::vector<double> coeffs_;
};

/// Complex polynomial helpers used by the partial-fraction code.
namespace cpoly {

/// Coefficients (ascending) of prod_k (z - roots[k]).
std::vector<cplx> from_roots(const std::vector<cplx>& roots);

/// First `count` Taylor coefficients of p around z0: p(z0 + u) = sum c_k u^k.
std::vector<cplx> taylor_shift(std::vector<cplx> p, cplx z0, int count);

cplx eval(const std::vector<cplx>& p, cplx z) noexcept;

}  // namespace cpoly

}  // namespace decaylab
