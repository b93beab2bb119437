// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status is
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "decaylab/oracle.hpp"
#include "decaylab/profiles.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/survival.hpp"
#include "decaylab/tailfit.hpp"
#include "decaylab/theorems.hpp"

using namespace decaylab;

namespace {

constexpr double kPi = 3.14159265358979323846;

Model flat(double alpha, double eta) { return Model(ModelSpec{alpha, CouplingProfile::flat(eta)}); }
Model lorentzian(double alpha, double s, double tau = 1.0) {
  return Model(ModelSpec{alpha, CouplingProfile::rational(s, {1.0}, {1.0, 0.0, 1.0}, Support::FullLine), tau});
}
Model case1(double alpha, double s) {
  return Model(ModelSpec{alpha, CouplingProfile::rational(s, {1.0}, {1.0, 0.0, 1.0}, Support::HalfLine)});
}
Model case2(double alpha, double s) {
  return Model(ModelSpec{alpha, CouplingProfile::rational(s, {0.0, 1.0}, {1.0, 0.0, 2.0, 0.0, 1.0}, Support::HalfLine)});
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const char* what, double value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3g%s", detail.empty() ? "" : " ", what, value, ok ? "" : "(!)");
    detail += buf;
    pass = pass && ok;
  }
};

double max_gap(const AmplitudeSeries& a, const AmplitudeSeries& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.amplitude[i] - b.amplitude[i]));
  return m;
}

// ---- 1: flat model -------------------------------------------------------
Outcome flat_exactness() {
  Outcome o;
  const auto m = flat(1.0, 0.01);
  const auto t = linear_grid(0.0, 20.0, 201);
  const auto q = survival_quadrature(m, t);
  double gap = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    gap = std::max(gap, std::abs(q.survival[i] - std::exp(-2.0 * kPi * 0.01 * t[i])));
  o.require(gap < 1e-6, "W_gap", gap);
  const auto p = resonance_poles(m);
  const cplx expect(1.0, -kPi * 0.01);
  const double pole_gap = p.poles.size() == 1 ? std::abs(p.poles[0].lambda0 - expect) : 1.0;
  o.require(pole_gap < 1e-10, "pole_gap", pole_gap);
  return o;
}

// ---- 2: Golden-Rule rate -------------------------------------------------
Outcome golden_rate() {
  Outcome o;
  auto rel_err = [](double tau) {
    const auto m = lorentzian(1.0, 0.1, tau);
    const double expect = 2.0 * kPi * tau * 0.05;  // eta(1) = 0.1 / 2
    // W falls to 0.1 at about ln 10 / expect
    const double t_end = 1.2 * std::log(10.0) / expect;
    const auto s = survival_quadrature(m, linear_grid(0.0, t_end, 400));
    return std::abs(fit_decay_rate(s).rate - expect) / expect;
  };
  const double e04 = rel_err(0.04), e01 = rel_err(0.01);
  o.require(e01 < 0.10, "err@0.01", e01);
  o.require(e01 < e04, "err@0.04", e04);
  return o;
}

// ---- 3: pole sum ---------------------------------------------------------
Outcome pole_sum() {
  Outcome o;
  const auto m = lorentzian(1.0, 0.1);
  const auto poles = poles_with_weights(m);
  o.require(poles.poles.size() == 2, "poles", static_cast<double>(poles.poles.size()));
  const double gsum = std::abs(poles.gamma_sum() - cplx(1.0, 0.0));
  o.require(gsum < 1e-8, "gamma_sum_gap", gsum);
  const auto t = linear_grid(0.0, 20.0, 201);
  const double gap = max_gap(survival_quadrature(m, t), survival_pole_sum(m, poles, t));
  o.require(gap < 1e-6, "A_gap", gap);
  return o;
}

// ---- 4: transform theorems -----------------------------------------------
Outcome theorem_suite() {
  Outcome o;
  const auto m = lorentzian(1.0, 0.1);
  std::vector<double> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(-4.75 + 0.5 * i);
  const double inv = involution_residual(m, pts);
  o.require(inv < 1e-4, "involution", inv);

  const auto bv = boundary_value_residuals(m, 0.7, {1e-1, 1e-2, 1e-3, 1e-4});
  bool decreasing = true;
  for (std::size_t i = 1; i < bv.size(); ++i) decreasing = decreasing && bv[i] < bv[i - 1];
  o.require(decreasing, "bv_last", bv.back());

  const double lhp = lower_half_plane_residual(m, {{0.0, -0.5}, {2.0, -3.0}, {-1.0, -0.05}, {0.7, -1.0}});
  o.require(lhp < 1e-6, "lhp", lhp);
  const double res = resolvent_identity_residual(m, {{0.1, 0.4}, {-2.0, 3.0}, {1.0, 1.001}, {5.0, -0.3}});
  o.require(res < 1e-6, "resolvent", res);
  return o;
}

// ---- 5: bound states -----------------------------------------------------
Outcome bound_physics() {
  Outcome o;
  bool always = true;
  for (double a : {-0.5, 0.1, 0.5, 1.0, 2.0, 4.0}) always = always && bound_state(case1(a, 0.5)).has_value();
  o.require(always, "case1_binds", always ? 1.0 : 0.0);

  // bisection on alpha for the eta(0) = 0 profile
  const double s = 0.4;
  const double thr = bound_threshold(case2(1.0, s));
  double lo = -1.0, hi = 2.0;
  const bool bracket_ok = bound_state(case2(lo, s)).has_value() && !bound_state(case2(hi, s)).has_value();
  o.require(bracket_ok, "bracket", bracket_ok ? 1.0 : 0.0);
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    (bound_state(case2(mid, s)).has_value() ? lo : hi) = mid;
  }
  const double thr_gap = std::abs(0.5 * (lo + hi) - thr);
  o.require(thr_gap < 1e-8, "threshold_gap", thr_gap);

  double worst = 0;
  for (const auto& mm : {case1(0.5, 0.5), case2(0.1, s), case2(1.0, s)}) worst = std::max(worst, completeness(mm));
  o.require(worst < 1e-6, "completeness", worst);

  const auto m = case1(0.5, 0.5);
  const auto b = bound_state(m);
  const auto dm = discretize(m, 2000, 50.0);
  const auto eig = diagonalize(dm);
  const double lam_gap = std::abs(eig.values[0] - b->lambda0);
  o.require(lam_gap < 1e-4, "lambda0_gap", lam_gap);
  const double w_gap = std::abs(eig.overlap[0] - b->weight0);
  o.require(w_gap < 1e-3, "weight_gap", w_gap);
  return o;
}

// ---- 6: oracle -----------------------------------------------------------
double oracle_gap(const Model& m, int n, double e_max, const std::vector<double>& t) {
  const auto dm = discretize(m, n, e_max);
  return max_gap(survival_discrete(dm, diagonalize(dm), t), survival_quadrature(m, t));
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto m = lorentzian(1.0, 0.1);
  const auto poles = resonance_poles(m);
  // ten lifetimes of the longest-lived component
  double slow = 1e300;
  for (const auto& p : poles.poles) slow = std::min(slow, 2.0 * std::abs(p.lambda0.imag()));
  const auto t = linear_grid(0.0, 10.0 / slow, 200);
  double prev = 1e300;
  bool monotone = true;
  for (int n : {250, 500, 1000, 2000}) {
    const double g = oracle_gap(m, n, 50.0, t);
    monotone = monotone && g < prev;
    prev = g;
  }
  o.require(monotone, "monotone", monotone ? 1.0 : 0.0);
  o.require(prev < 1e-3, "gap@2000", prev);

  const auto h = case2(1.0, 0.4);
  const auto hp = resonance_poles(h);
  double hslow = 1e300;
  for (const auto& p : hp.poles) hslow = std::min(hslow, 2.0 * std::abs(p.lambda0.imag()));
  const double hg = oracle_gap(h, 2000, 50.0, linear_grid(0.0, 10.0 / hslow, 200));
  o.require(hg < 1e-3, "halfline@2000", hg);

  // flat profile: reported only, the node rule cannot resolve the Lorentzian tails at this size
  const auto f = flat(1.0, 0.01);
  const double fg = oracle_gap(f, 2000, 50.0, linear_grid(0.0, 10.0 / (2.0 * kPi * 0.01), 200));
  std::printf("INFO  oracle flat model n=2000 e_max=50 max|dA|=%.3g\n", fg);
  return o;
}

// ---- 7: the anomaly ------------------------------------------------------
Outcome anomaly() {
  Outcome o;
  const auto m = case2(1.0, 0.4);
  const auto parts = decompose(m);
  const auto t = log_grid(1e-3, 50.0, 120);
  const double gap = max_gap(survival_decomposed(m, parts, t), survival_quadrature(m, t));
  o.require(gap < 1e-4, "decomp_gap", gap);

  const double tc = crossover_time(m, parts);
  bool dominates = true;
  for (double f : {1.5, 2.0, 4.0, 10.0, 40.0}) {
    const double tt = f * tc;
    dominates = dominates && std::abs(cut_amplitude(m, tt)) > std::abs(pole_part(m, parts, tt));
  }
  o.require(dominates, "t_cross", tc);

  const auto late = survival_decomposed(m, parts, log_grid(100.0, 1e4, 40));
  const auto r = tail_slope(late, 100.0, 1e4);
  o.require(r.slope <= -1.0, "slope", r.slope);
  o.require(r.exponential_rejected, "exp_rejected", r.exponential_rejected ? 1.0 : 0.0);
  return o;
}

// ---- 8: symmetry and kink ------------------------------------------------
double conj_gap(const std::function<AmplitudeSeries(const std::vector<double>&)>& run) {
  const std::vector<double> pos = {0.3, 1.0, 2.5, 7.0, 15.0};
  std::vector<double> both;
  for (double v : pos) both.push_back(-v);
  both.insert(both.end(), pos.begin(), pos.end());
  const auto s = run(both);
  double m = 0;
  for (std::size_t i = 0; i < pos.size(); ++i)
    m = std::max(m, std::abs(s.amplitude[i] - std::conj(s.amplitude[i + pos.size()])));
  return m;
}

Outcome symmetry_kink() {
  Outcome o;
  const auto f = flat(1.0, 0.01);
  const auto lz = lorentzian(1.0, 0.1);
  const auto h = case2(1.0, 0.4);
  const auto lzp = poles_with_weights(lz);
  const auto dm = discretize(lz, 400, 50.0);
  const auto eig = diagonalize(dm);

  double worst = 0;
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_flat_closed(f, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_quadrature(lz, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_quadrature(h, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_golden_rule(lz, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_pole_sum(lz, lzp, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_discrete(dm, eig, t); }));
  worst = std::max(worst, conj_gap([&](const auto& t) { return survival_decomposed(h, t); }));
  o.require(worst < 1e-12, "conj_gap", worst);

  const double rate = 2.0 * kPi * 0.01, step = 1e-4;
  double kink = 0;
  for (const auto& s : {survival_quadrature(f, {-step, 0.0, step}), survival_flat_closed(f, {-step, 0.0, step})}) {
    const double right = (s.survival[2] - s.survival[1]) / step;
    const double left = (s.survival[1] - s.survival[0]) / step;
    kink = std::max(kink, std::abs(right + rate) / rate);
    kink = std::max(kink, std::abs(left - rate) / rate);
  }
  o.require(kink < 1e-3, "slope_rel_err", kink);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"1 flat-model exactness", flat_exactness}, {"2 golden-rule rate", golden_rate},
      {"3 pole-sum equivalence", pole_sum},       {"4 transform theorems", theorem_suite},
      {"5 bound-state physics", bound_physics},   {"6 oracle equivalence", oracle_equivalence},
      {"7 late-time anomaly", anomaly},           {"8 symmetry and kink", symmetry_kink},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-26s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed;
}
