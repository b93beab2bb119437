#include <doctest.h>

#include <cmath>

#include "decaylab/errors.hpp"
#include "decaylab/quadrature.hpp"
#include "decaylab/tailfit.hpp"
#include "fixtures.hpp"

using namespace decaylab;

namespace {
const cplx I(0, 1);
}

TEST_CASE("resolvent on the physical sheet") {
  const auto m = fx::lorentzian();
  const cplx z(0.5, 0.5);
  CHECK(std::abs(resolvent(m, z, Sheet::Physical) - 1.0 / (1.0 - z + fx::kPi * 0.1 / (z + I))) < 1e-14);
}

TEST_CASE("cut jump is the difference of the two sheets") {
  for (const auto& m : {fx::case1(), fx::case2()}) {
    for (double mu : {1e-3, 0.1, 2.0, 30.0}) {
      const cplx z(0.0, -mu);
      const cplx diff = resolvent(m, z, Sheet::Continued) - resolvent(m, z, Sheet::Physical);
      const auto j = cut_jump(m, mu);
      CHECK(std::abs(j.value - diff) < 1e-10 * (1 + std::abs(diff)));
      CHECK(std::abs(cut_jump(m, mu, true).value + j.value) < 1e-12 * (1 + std::abs(diff)));
    }
  }
  CHECK_THROWS_AS(cut_jump(fx::case2(), 0.0), DomainError);
  CHECK_THROWS_AS(cut_jump(fx::lorentzian(), 1.0), WrongSupportError);
}

TEST_CASE("eta(0) = 0: jump vanishes linearly at threshold") {
  const auto m = fx::case2();
  const double r = std::abs(cut_jump(m, 1e-3).value) / std::abs(cut_jump(m, 1e-4).value);
  CHECK(r == doctest::Approx(10.0).epsilon(1e-2));
  CHECK(std::abs(cut_jump(m, 1e-4).value) == doctest::Approx(5.34e-4).epsilon(1e-2));
}

TEST_CASE("decomposition identity against quadrature") {
  const auto t = log_grid(1e-2, 50.0, 40);
  for (const auto& m : {fx::case1(), fx::case2(), fx::case2(0.1)}) {
    const auto d = survival_decomposed(m, t);
    const auto q = survival_quadrature(m, t);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(d.amplitude[i] - q.amplitude[i]) < 1e-9);
  }
  const auto z = survival_decomposed(fx::case2(), {-2.0, 0.0, 2.0});
  CHECK(z.amplitude[1] == cplx(1.0));
  CHECK(std::abs(z.amplitude[0] - std::conj(z.amplitude[2])) < 1e-15);
  CHECK_THROWS_AS(survival_decomposed(fx::case2(), {NAN}), DomainError);
  CHECK_THROWS_AS(survival_decomposed(fx::lorentzian(), {1.0}), WrongSupportError);
}

TEST_CASE("property: decomposition on random half-line models") {
  fx::Gen g(53);
  for (int i = 0; i < 6; ++i) {
    const Model m(g.half_line_model());
    const auto t = log_grid(0.05, 30.0, 12);
    const auto d = survival_decomposed(m, t);
    const auto q = survival_quadrature(m, t);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(std::abs(d.amplitude[k] - q.amplitude[k]) < 1e-8);
  }
}

TEST_CASE("crossover: the cut term takes over from the leading resonance") {
  const auto m = fx::case2();
  const auto parts = decompose(m);
  CHECK_FALSE(parts.bound.has_value());
  const double tc = crossover_time(m, parts);
  CHECK(tc == doctest::Approx(24.68).epsilon(1e-3));
  auto lead = [&](double t) {
    double best = 0;
    for (const auto& p : parts.poles.poles) best = std::max(best, std::abs(p.gamma * std::exp(-I * p.lambda0 * t)));
    return best;
  };
  for (double f : {1.5, 3.0, 10.0}) CHECK(std::abs(cut_amplitude(m, f * tc)) > lead(f * tc));
  CHECK(std::abs(cut_amplitude(m, 0.5 * tc)) < lead(0.5 * tc));
}

TEST_CASE("late-time power law for eta(0) = 0") {
  const auto m = fx::case2();
  const auto s = survival_decomposed(m, log_grid(100.0, 1e4, 30));
  const auto r = tail_slope(s, 100.0, 1e4);
  CHECK(r.points == 30);
  CHECK(r.slope == doctest::Approx(-2.0).epsilon(2e-2));
  CHECK(r.slope_err < 0.01);
  CHECK(r.exponential_rejected);
  // |A| ~ 8.5e-7 at t = 1000
  CHECK(std::abs(cut_amplitude(m, 1000.0)) == doctest::Approx(8.5e-7).epsilon(2e-2));
}

TEST_CASE("tail fit of a pure exponential keeps the exponential") {
  AmplitudeSeries s;
  s.times = linear_grid(1.0, 5.0, 20);
  for (double t : s.times) s.amplitude.push_back(std::exp(-0.7 * t));
  survival_probability(s);
  const auto r = tail_slope(s, 1.0, 5.0);
  CHECK_FALSE(r.exponential_rejected);
  CHECK_THROWS_AS(tail_slope(s, 1.0, 1.5), InsufficientDataError);
  CHECK_THROWS_AS(tail_slope(s, 0.0, 5.0), DomainError);
}

TEST_CASE("synthetic t^-2 input") {
  AmplitudeSeries s;
  s.times = log_grid(10.0, 1e4, 25);
  for (double t : s.times) s.amplitude.push_back(1.0 / (t * t));
  survival_probability(s);
  const auto r = tail_slope(s, 10.0, 1e4);
  CHECK(std::abs(r.slope + 2.0) < 1e-10);
  CHECK(r.slope_err >= 0.0);
  CHECK(r.exponential_rejected);
}

TEST_CASE("jump at threshold: eta(0) > 0 decays slowly, eta(0) = 0 linearly") {
  const auto c1 = fx::case1();
  CHECK(std::abs(cut_jump(c1, 1e-3).value) < std::abs(cut_jump(c1, 1e-1).value));
  const auto c2 = fx::case2();
  for (double mu : {1e-4, 1e-3, 1e-2}) {
    const double ratio = std::abs(cut_jump(c2, mu).value) / mu;
    CHECK(ratio == doctest::Approx(std::abs(cut_jump(c2, 1e-4).value) / 1e-4).epsilon(0.1));
  }
  // small mu: F ~ 2 pi i eta(l) / (alpha - l - A(l))^2 at l = -i mu
  const double mu = 1e-4;
  const cplx l(0.0, -mu);
  const cplx d = c2.alpha() - l - halfline::regular_part(c2, l);
  const cplx approx = 2.0 * fx::kPi * I * c2.eta_analytic(l) / (d * d);
  CHECK(std::abs(cut_jump(c2, mu).value - approx) < 1e-2 * std::abs(approx));
}

TEST_CASE("cut term against a direct Laplace quadrature") {
  const auto m = fx::case2();
  const double t = 10.0;
  auto F = [&](double mu) { return cut_jump(m, mu).value; };
  auto direct = [&](double tt, bool weighted) {
    auto f = [&](double mu) { return F(mu) * std::exp(-mu * tt) * (weighted ? -mu : 1.0); };
    return -quad::integrate(f, 0.0, 40.0 / tt).value / (2 * fx::kPi);
  };
  CHECK(std::abs(cut_amplitude(m, t) - direct(t, false)) < 1e-8 * std::abs(direct(t, false)));
  // d/dt of the cut term is the mu-weighted integral
  const double h = 1e-3;
  const cplx fd = (cut_amplitude(m, t + h) - cut_amplitude(m, t - h)) / (2 * h);
  CHECK(std::abs(fd - direct(t, true)) < 1e-6 * std::abs(direct(t, true)));
}

TEST_CASE("cut term: monotone envelope and t^-2 law") {
  const auto m = fx::case2();
  for (double t : {5.0, 20.0, 80.0, 300.0}) CHECK(std::abs(cut_amplitude(m, 2 * t)) < std::abs(cut_amplitude(m, t)));
  const double c1 = std::abs(cut_amplitude(m, 1e3)) * 1e6, c2 = std::abs(cut_amplitude(m, 1e4)) * 1e8;
  CHECK(c1 == doctest::Approx(c2).epsilon(2e-2));
  CHECK_THROWS_AS(cut_amplitude(m, 0.0), DomainError);
}

TEST_CASE("decomposition limits") {
  for (const auto& m : {fx::case1(), fx::case2()}) {
    const auto s = survival_decomposed(m, {1e-3});
    CHECK(std::abs(s.amplitude[0] - 1.0) < 1e-2);  // A(t) = 1 - i alpha t + ...
    CHECK(std::abs(s.amplitude[0] - survival_quadrature(m, {1e-3}).amplitude[0]) < 1e-4);
  }
  // a few lifetimes in, the poles carry the amplitude. The cut term scales with
  // the coupling, so this needs a weaker coupling than the shipped profile (there it is ~5-10%).
  {
    const auto w = fx::case2(1.0, 0.04);
    const auto parts = decompose(w);
    const double life = 1.0 / (2 * std::abs(parts.poles.poles[0].lambda0.imag()));
    for (double f : {1.0, 2.0, 3.0})
      CHECK(std::abs(cut_amplitude(w, f * life)) < 1e-3 * std::abs(pole_part(w, parts, f * life)));
  }
  // past the crossover the full amplitude sits above the pole-only part
  const auto m = fx::case2();
  const auto parts = decompose(m);
  const double tc = crossover_time(m, parts);
  for (double f : {2.0, 4.0}) {
    const double tt = f * tc;
    CHECK(std::abs(survival_quadrature(m, {tt}).amplitude[0]) > std::abs(pole_part(m, parts, tt)));
  }
}
