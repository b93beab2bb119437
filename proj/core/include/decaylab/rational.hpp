#pragma once

#include <vector>

#include "decaylab/polynomial.hpp"

namespace decaylab {

/// One pole of a partial-fraction expansion: sum_j laurent[j-1] / (z - location)^j.
struct PoleTerm {
  cplx location;
  std::vector<cplx> laurent;

  int multiplicity() const noexcept { return static_cast<int>(laurent.size()); }
};

/// scale * num(z) / den(z) with its partial-fraction expansion over the complex
/// roots of den. Only strictly proper functions carry a complete expansion.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den, double scale = 1.0);

  double operator()(double x) const noexcept;
  cplx operator()(cplx z) const noexcept;
  cplx derivative(cplx z) const noexcept;

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  double scale() const noexcept { return scale_; }
  bool strictly_proper() const noexcept { return num_.degree() < den_.degree(); }

  /// Partial fractions. Roots of den closer than ~1e-5 relative are merged
  /// into one pole of higher multiplicity.
  const std::vector<PoleTerm>& poles() const noexcept { return poles_; }

  /// Sum of the partial-fraction terms of the given poles (and derivative).
  static cplx pole_sum(const std::vector<PoleTerm>& poles, cplx z) noexcept;
  static cplx pole_sum_derivative(const std::vector<PoleTerm>& poles, cplx z) noexcept;

 private:
  Polynomial num_;
  Polynomial den_;
  Polynomial dnum_;
  Polynomial dden_;
  double scale_ = 1.0;
  std::vector<PoleTerm> poles_;
};

}  // namespace decaylab
