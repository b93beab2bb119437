#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decaylab/polynomial.hpp"
#include "decaylab/rational.hpp"

namespace decaylab {

enum class ProfileKind { Flat, RationalFullLine, RationalHalfLine };
enum class Support { FullLine, HalfLine };

/// eta(E) = strength * num(E) / den(E) (Flat: the constant `strength`).
struct CouplingProfile {
  ProfileKind kind = ProfileKind::Flat;
  double strength = 0.0;
  std::vector<double> num{1.0};  // ascending powers of E
  std::vector<double> den{1.0};
  Support support = Support::FullLine;
  double log_scale_c = 1.0;

  static CouplingProfile flat(double strength);
  static CouplingProfile rational(double strength, std::vector<double> num, std::vector<double> den,
                                  Support support, double log_scale_c = 1.0);

  bool operator==(const CouplingProfile&) const = default;
};

struct ModelSpec {
  double alpha = 0.0;
  CouplingProfile profile;
  double tau = 1.0;
  double hbar = 1.0;

  bool operator==(const ModelSpec&) const = default;
};

/// Invariant violations of a spec; empty when well formed. Never throws.
std::vector<std::string> validate(const ModelSpec& spec);

/// tau * eta(E) with the support applied (0 for E <= 0 on the half line).
/// Validates on every call; prefer Model::eta in loops.
double eta_eval(const ModelSpec& spec, double E);

/// A validated spec with its effective density tau*eta cached in rational form.
/// Immutable; safe to share between threads.
class Model {
 public:
  /// Throws ValidationError listing every diagnostic.
  explicit Model(ModelSpec spec);

  const ModelSpec& spec() const noexcept { return spec_; }
  double alpha() const noexcept { return spec_.alpha; }
  double hbar() const noexcept { return spec_.hbar; }
  double tau() const noexcept { return spec_.tau; }
  double log_scale_c() const noexcept { return spec_.profile.log_scale_c; }
  ProfileKind kind() const noexcept { return spec_.profile.kind; }
  bool flat() const noexcept { return spec_.profile.kind == ProfileKind::Flat; }
  bool half_line() const noexcept { return spec_.profile.support == Support::HalfLine; }

  /// Effective density on the real axis, support applied.
  double eta(double E) const;

  /// The rational expression tau*eta continued to complex z (no support cut).
  cplx eta_analytic(cplx z) const;
  cplx eta_analytic_derivative(cplx z) const;

  /// Flat kind only: the constant tau * strength.
  double flat_density() const noexcept { return flat_value_; }

  /// Partial fractions of tau*eta (empty for Flat).
  const std::vector<PoleTerm>& poles() const noexcept { return rational_.poles(); }
  const std::vector<PoleTerm>& upper_poles() const noexcept { return upper_; }
  const std::vector<PoleTerm>& lower_poles() const noexcept { return lower_; }
  const RationalFunction& rational() const noexcept { return rational_; }

  /// Typical energy scale of the profile: max(1, |alpha|, |poles|).
  double energy_scale() const noexcept { return energy_scale_; }

 private:
  ModelSpec spec_;
  RationalFunction rational_;
  std::vector<PoleTerm> upper_;
  std::vector<PoleTerm> lower_;
  double flat_value_ = 0.0;
  double energy_scale_ = 1.0;
};

std::string to_string(ProfileKind kind);
std::string to_string(Support support);

}  // namespace decaylab
