#include <doctest.h>

#include <cmath>

#include "decaylab/errors.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/survival.hpp"
#include "fixtures.hpp"

using namespace decaylab;

namespace {
double max_gap(const AmplitudeSeries& a, const AmplitudeSeries& b) {
  double g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = std::max(g, std::abs(a.amplitude[i] - b.amplitude[i]));
  return g;
}
}  // namespace

TEST_CASE("grids") {
  const auto l = linear_grid(0.0, 10.0, 101);
  REQUIRE(l.size() == 101);
  CHECK(l.front() == 0.0);
  CHECK(l.back() == 10.0);
  CHECK(l[10] == doctest::Approx(1.0));
  const auto g = log_grid(1e-2, 1e2, 5);
  CHECK(g.front() == doctest::Approx(1e-2));
  CHECK(g[2] == doctest::Approx(1.0));
  CHECK(g.back() == doctest::Approx(1e2));
  CHECK_THROWS_AS(linear_grid(1.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), DomainError);
}

TEST_CASE("flat closed form: W(10) for eta = 0.01") {
  const auto s = survival_flat_closed(fx::flat(1.0, 0.01), {0.0, 10.0});
  CHECK(s.survival[0] == 1.0);
  CHECK(s.survival[1] == doctest::Approx(std::exp(-0.2 * fx::kPi)).epsilon(1e-14));
  CHECK(s.survival[1] == doctest::Approx(0.5335).epsilon(1e-4));
  CHECK(std::abs(s.amplitude[1] - std::exp(cplx(-0.1 * fx::kPi, -10.0))) < 1e-15);
  CHECK(s.method == Method::FlatClosed);
  CHECK_THROWS_AS(survival_flat_closed(fx::lorentzian(), {1.0}), WrongModelError);
}

TEST_CASE("flat model: quadrature reproduces the exponential law") {
  const auto m = fx::flat(1.0, 0.01);
  const auto t = linear_grid(0.0, 20.0, 81);
  CHECK(max_gap(survival_quadrature(m, t), survival_flat_closed(m, t)) < 1e-10);
}

TEST_CASE("Lorentzian: quadrature equals the two-pole sum") {
  const auto m = fx::lorentzian();
  const auto t = linear_grid(0.0, 20.0, 81);
  const auto ps = poles_with_weights(m);
  CHECK(max_gap(survival_quadrature(m, t), survival_pole_sum(m, ps, t)) < 1e-9);
}

TEST_CASE("Golden Rule series and fitted rate") {
  const auto m = fx::lorentzian();
  const auto t = linear_grid(0.0, 10.0, 201);
  const auto s = survival_golden_rule(m, t);
  const auto fit = fit_decay_rate(s);
  CHECK(fit.rate == doctest::Approx(2 * fx::kPi * 0.05).epsilon(1e-10));
  CHECK(fit.intercept == doctest::Approx(0.0).epsilon(1e-10));
  // phase runs at alpha - pi sigma(alpha) = 1 + 0.05 pi
  CHECK(std::arg(s.amplitude[1] / std::abs(s.amplitude[1])) ==
        doctest::Approx(-(1 + 0.05 * fx::kPi) * t[1]).epsilon(1e-12));
  CHECK_THROWS_AS(survival_golden_rule(fx::case2(-0.5), t), DomainError);
}

TEST_CASE("fit_decay_rate needs points inside the W window") {
  AmplitudeSeries s;
  s.times = {0.0, 1.0};
  s.amplitude = {1.0, 1.0};
  survival_probability(s);
  CHECK_THROWS_AS(fit_decay_rate(s), InsufficientDataError);
}

TEST_CASE("survival_probability is |A|^2 and idempotent") {
  AmplitudeSeries s;
  s.times = {0.0, 1.0};
  s.amplitude = {cplx(0.6, 0.8), cplx(0.3, -0.4)};
  survival_probability(s);
  CHECK(s.survival[1] == doctest::Approx(0.25));
  const auto copy = s.survival;
  survival_probability(s);
  CHECK(s.survival == copy);
}

TEST_CASE("continuum amplitude: unit norm at t = 0 with and without a bound state") {
  for (const auto& m : {fx::lorentzian(), fx::case1(), fx::case2()}) {
    const ContinuumAmplitude amp(m);
    CHECK(std::abs(amp(0.0) - 1.0) < 1e-9);
    const double w0 = amp.bound() ? amp.bound()->weight0 : 0.0;
    CHECK(amp.mass() + w0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(amp.horizon() > 1e3);
    CHECK(amp.panel_count() > 0);
  }
}

TEST_CASE("times past the resolvable horizon are refused") {
  const auto m = fx::lorentzian();
  const ContinuumAmplitude amp(m);
  try {
    survival_quadrature(m, {0.0, 10 * amp.horizon()});
    FAIL("expected ResolutionError");
  } catch (const ResolutionError& e) {
    CHECK(e.achievable_horizon() == doctest::Approx(amp.horizon()));
  }
}

TEST_CASE("property: A(-t) = conj A(t) for every continuum method") {
  fx::Gen g(7);
  const std::vector<double> ts{0.3, 1.7, 6.0};
  std::vector<double> both;
  for (double t : ts) both.push_back(-t), both.push_back(t);
  for (int i = 0; i < 4; ++i) {
    const Model m(g.full_line_model());
    const auto ps = poles_with_weights(m);
    for (const auto& s : {survival_quadrature(m, both), survival_golden_rule(m, both), survival_pole_sum(m, ps, both)})
      for (std::size_t k = 0; k < both.size(); k += 2)
        CHECK(std::abs(s.amplitude[k] - std::conj(s.amplitude[k + 1])) < 1e-13);
  }
  const auto f = fx::flat();
  const auto s = survival_flat_closed(f, both);
  for (std::size_t k = 0; k < both.size(); k += 2) CHECK(std::abs(s.amplitude[k] - std::conj(s.amplitude[k + 1])) < 1e-15);
}

TEST_CASE("property: hbar only rescales time") {
  fx::Gen g(9);
  for (int i = 0; i < 4; ++i) {
    auto spec = g.full_line_model();
    const Model m1(spec);
    spec.hbar = g.uniform(0.5, 3.0);
    const Model m2(spec);
    for (double t : {0.5, 2.0, 7.0}) {
      const auto a1 = survival_quadrature(m1, {t / spec.hbar});
      const auto a2 = survival_quadrature(m2, {t});
      CHECK(std::abs(a1.amplitude[0] - a2.amplitude[0]) < 1e-9);
    }
  }
}

TEST_CASE("property: 0 <= W <= 1 and W(0) = 1") {
  fx::Gen g(13);
  for (int i = 0; i < 4; ++i) {
    const Model m(g.half_line_model());
    const auto s = survival_quadrature(m, linear_grid(0.0, 30.0, 61));
    CHECK(s.survival[0] == doctest::Approx(1.0).epsilon(1e-9));
    for (double w : s.survival) {
      CHECK(w >= 0.0);
      CHECK(w <= 1.0 + 1e-9);
    }
  }
}
