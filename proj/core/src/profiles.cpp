#include "decaylab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "decaylab/errors.hpp"

namespace decaylab {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::vector<double> trimmed(std::vector<double> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  return c;
}

// Sample grid: arcsinh-spaced over the full line (|E| up to ~1e13) or
// log-spaced over the half line, plus a fine linear patch around alpha.
std::vector<double> validation_grid(const ModelSpec& spec) {
  std::vector<double> g;
  const bool half = spec.profile.support == Support::HalfLine;
  for (int i = 0; i <= 1000; ++i) {
    const double u = -30.0 + 60.0 * i / 1000.0;
    g.push_back(half ? std::exp(u) : std::sinh(u));
  }
  for (int i = -50; i <= 50; ++i) {
    const double e = spec.alpha + 0.1 * i;
    if (!half || e > 0) g.push_back(e);
  }
  return g;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : Error("invalid model: " + join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

CouplingProfile CouplingProfile::flat(double strength) {
  CouplingProfile p;
  p.kind = ProfileKind::Flat;
  p.strength = strength;
  return p;
}

CouplingProfile CouplingProfile::rational(double strength, std::vector<double> num, std::vector<double> den,
                                          Support support, double log_scale_c) {
  CouplingProfile p;
  p.kind = support == Support::FullLine ? ProfileKind::RationalFullLine : ProfileKind::RationalHalfLine;
  p.strength = strength;
  p.num = std::move(num);
  p.den = std::move(den);
  p.support = support;
  p.log_scale_c = log_scale_c;
  return p;
}

std::vector<std::string> validate(const ModelSpec& spec) {
  std::vector<std::string> diag;
  const auto& p = spec.profile;
  if (!(spec.tau > 0) || !std::isfinite(spec.tau)) diag.push_back("tau must be positive");
  if (!(spec.hbar > 0) || !std::isfinite(spec.hbar)) diag.push_back("hbar must be positive");
  if (!std::isfinite(spec.alpha)) diag.push_back("alpha must be finite");
  if (!(p.strength >= 0) || !std::isfinite(p.strength)) diag.push_back("strength must be nonnegative");
  if (!(p.log_scale_c > 0) || !std::isfinite(p.log_scale_c)) diag.push_back("log_scale_c must be positive");
  if (p.support == Support::HalfLine && spec.alpha == 0.0)
    diag.push_back("alpha must be nonzero for half-line support");

  if (p.kind == ProfileKind::Flat) {
    if (p.support != Support::FullLine) diag.push_back("flat profile requires full-line support");
    return diag;
  }
  if (p.kind == ProfileKind::RationalFullLine && p.support != Support::FullLine)
    diag.push_back("rational_full_line profile requires full-line support");
  if (p.kind == ProfileKind::RationalHalfLine && p.support != Support::HalfLine)
    diag.push_back("rational_half_line profile requires half-line support");

  for (double c : p.num)
    if (!std::isfinite(c)) diag.push_back("numerator coefficients must be finite");
  for (double c : p.den)
    if (!std::isfinite(c)) diag.push_back("denominator coefficients must be finite");
  if (!diag.empty()) return diag;

  const auto num = trimmed(p.num);
  const auto den = trimmed(p.den);
  if (den.empty()) {
    diag.push_back("denominator is the zero polynomial");
    return diag;
  }
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn >= 0 && dd < dn + 2) diag.push_back("tail decay too slow: degree(den) must be >= degree(num) + 2");

  const Polynomial dpoly(den);
  bool real_root = false;
  for (const cplx& r : dpoly.roots()) {
    const bool on_axis = std::abs(r.imag()) <= 1e-10 * std::max(1.0, std::abs(r));
    const bool in_support = p.support == Support::FullLine || r.real() >= 0.0;
    if (on_axis && in_support) {
      diag.push_back("denominator has a real root in the support at E=" + num_str(r.real()));
      real_root = true;
    }
  }
  if (real_root) return diag;

  const Polynomial npoly(num);
  for (double e : validation_grid(spec)) {
    const double d = dpoly(e);
    if (d == 0.0) {
      diag.push_back("denominator vanishes at E=" + num_str(e));
      break;
    }
    if (p.strength * npoly(e) / d < 0.0) {
      diag.push_back("coupling density negative at E=" + num_str(e));
      break;
    }
  }
  return diag;
}

double eta_eval(const ModelSpec& spec, double E) { return Model(spec).eta(E); }

Model::Model(ModelSpec spec) : spec_(std::move(spec)) {
  auto diag = validate(spec_);
  if (!diag.empty()) throw ValidationError(std::move(diag));
  const auto& p = spec_.profile;
  energy_scale_ = std::max(1.0, std::abs(spec_.alpha));
  if (p.kind == ProfileKind::Flat) {
    flat_value_ = spec_.tau * p.strength;
    return;
  }
  rational_ = RationalFunction(Polynomial(p.num), Polynomial(p.den), spec_.tau * p.strength);
  for (const auto& t : rational_.poles()) {
    energy_scale_ = std::max(energy_scale_, std::abs(t.location));
    if (t.location.imag() > 0)
      upper_.push_back(t);
    else if (t.location.imag() < 0)
      lower_.push_back(t);
  }
}

double Model::eta(double E) const {
  if (half_line() && E <= 0.0) return 0.0;
  if (flat()) return flat_value_;
  const double d = rational_.denominator()(E);
  if (d == 0.0) throw DomainError("eta evaluated at a denominator root E=" + num_str(E));
  const double v = rational_.scale() * rational_.numerator()(E) / d;
  return v;
}

cplx Model::eta_analytic(cplx z) const {
  if (flat()) return flat_value_;
  const cplx d = rational_.denominator()(z);
  if (d == 0.0) throw PoleError("eta continued to a pole", z);
  return rational_.scale() * rational_.numerator()(z) / d;
}

cplx Model::eta_analytic_derivative(cplx z) const {
  if (flat()) return 0.0;
  return rational_.derivative(z);
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Flat: return "flat";
    case ProfileKind::RationalFullLine: return "rational_full_line";
    case ProfileKind::RationalHalfLine: return "rational_half_line";
  }
  return "?";
}

std::string to_string(Support support) { return support == Support::FullLine ? "full_line" : "half_line"; }

}  // namespace decaylab
