#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "decaylab/profiles.hpp"

namespace fx {

using decaylab::cplx;
using decaylab::CouplingProfile;
using decaylab::Model;
using decaylab::ModelSpec;
using decaylab::Support;

inline constexpr double kPi = 3.14159265358979323846;

inline ModelSpec flat_spec(double alpha = 1.0, double eta = 0.01) { return {alpha, CouplingProfile::flat(eta)}; }

// eta = s / (1 + E^2)
inline ModelSpec lorentzian_spec(double alpha = 1.0, double s = 0.1, double tau = 1.0) {
  return {alpha, CouplingProfile::rational(s, {1.0}, {1.0, 0.0, 1.0}, Support::FullLine), tau};
}

// half line, eta(0) > 0
inline ModelSpec case1_spec(double alpha = 0.5, double s = 0.5) {
  return {alpha, CouplingProfile::rational(s, {1.0}, {1.0, 0.0, 1.0}, Support::HalfLine)};
}

// half line, eta(0) = 0: s E / (1 + E^2)^2
inline ModelSpec case2_spec(double alpha = 1.0, double s = 0.4) {
  return {alpha, CouplingProfile::rational(s, {0.0, 1.0}, {1.0, 0.0, 2.0, 0.0, 1.0}, Support::HalfLine)};
}

inline Model flat(double alpha = 1.0, double eta = 0.01) { return Model(flat_spec(alpha, eta)); }
inline Model lorentzian(double alpha = 1.0, double s = 0.1, double tau = 1.0) {
  return Model(lorentzian_spec(alpha, s, tau));
}
inline Model case1(double alpha = 0.5, double s = 0.5) { return Model(case1_spec(alpha, s)); }
inline Model case2(double alpha = 1.0, double s = 0.4) { return Model(case2_spec(alpha, s)); }

// Hand-rolled generators for the property tests; fixed seeds keep runs reproducible.
class Gen {
 public:
  explicit Gen(unsigned long long seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  cplx upper(double r = 3.0) { return {uniform(-r, r), uniform(0.05, r)}; }
  cplx lower(double r = 3.0) { return {uniform(-r, r), -uniform(0.05, r)}; }

  // s / ((E - c)^2 + w^2): a shifted Lorentzian with random centre, width and strength
  ModelSpec full_line_model() {
    const double c = uniform(-2.0, 2.0), w = uniform(0.3, 2.0), s = log_uniform(0.01, 0.3);
    return {uniform(-2.0, 2.0), CouplingProfile::rational(s, {1.0}, {c * c + w * w, -2.0 * c, 1.0}, Support::FullLine)};
  }

  // s E^m / (1 + E^2)^k on the half line, m in {0, 1}
  ModelSpec half_line_model() {
    const int m = integer(0, 1);
    const double s = log_uniform(0.05, 0.6);
    std::vector<double> num(m + 1, 0.0);
    num[m] = 1.0;
    const std::vector<double> den = m == 0 ? std::vector<double>{1.0, 0.0, 1.0} : std::vector<double>{1.0, 0.0, 2.0, 0.0, 1.0};
    double alpha = uniform(-1.0, 2.0);
    if (std::abs(alpha) < 0.05) alpha = 0.5;
    return {alpha, CouplingProfile::rational(s, num, den, Support::HalfLine)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fx
