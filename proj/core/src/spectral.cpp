#include "decaylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "decaylab/errors.hpp"
#include "decaylab/pvcalc.hpp"
#include "decaylab/quadrature.hpp"

namespace decaylab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const cplx kI{0.0, 1.0};

std::string fmt_c(cplx z) {
  return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i)";
}

cplx continued_xi(const Model& m, cplx z) { return xi_eval(m, z, Sheet::Continued).value; }

struct NewtonOutcome {
  cplx z;
  bool ok;
};

NewtonOutcome newton(const Model& m, cplx z, const Tolerances& tol) {
  const double a = m.alpha();
  for (int it = 0; it < tol.newton_max_iter; ++it) {
    if (z.imag() >= 0.0 && m.half_line()) return {z, false};
    cplx f, df;
    try {
      f = a - z - kPi * continued_xi(m, z);
      df = -1.0 - kPi * xi_continued_derivative(m, z);
    } catch (const NumericError&) {
      return {z, false};
    }
    if (std::abs(df) == 0.0 || !std::isfinite(std::abs(f))) return {z, false};
    const cplx step = f / df;
    z -= step;
    if (std::abs(step) < tol.newton * (1.0 + std::abs(z))) return {z, true};
  }
  return {z, false};
}

// Winding number of g around the rectangle [x0, x1] x [y0, y1]; each edge is
// subdivided until consecutive phase steps stay below pi/4.
int winding(const std::function<cplx(cplx)>& g, double x0, double x1, double y0, double y1) {
  const cplx c[] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  double total = 0.0;
  std::function<double(cplx, cplx, cplx, cplx, int)> edge = [&](cplx a, cplx b, cplx ga, cplx gb, int depth) {
    const double d = std::arg(gb / ga);
    if (std::abs(d) < kPi / 4 || depth > 40) return d;
    const cplx m = 0.5 * (a + b);
    const cplx gm = g(m);
    return edge(a, m, ga, gm, depth + 1) + edge(m, b, gm, gb, depth + 1);
  };
  for (int k = 0; k < 4; ++k) {
    const cplx a = c[k], b = c[(k + 1) % 4];
    cplx prev = g(a);
    for (int i = 1; i <= 64; ++i) {
      const cplx z = a + (b - a) * (i / 64.0);
      const cplx gz = g(z);
      total += edge(z - (b - a) / 64.0, z, prev, gz, 0);
      prev = gz;
    }
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

// Roots of alpha - z - pi xi in the fourth quadrant: zeros minus poles
// (the poles of eta there) from the phase change around a large rectangle.
int count_half_line_roots(const Model& m, double r) {
  const double a = m.alpha();
  const double eps = 1e-6 * r;
  auto g = [&](cplx z) { return a - z - kPi * continued_xi(m, z); };
  int poles = 0;
  for (const auto& p : m.lower_poles())
    if (p.location.real() > eps && p.location.real() < r && p.location.imag() > -r) poles += p.multiplicity();
  // counter-clockwise: (eps,-r) -> (r,-r) -> (r,-eps) -> (eps,-eps)
  return winding(g, eps, r, -r, -eps) + poles;
}

}  // namespace

cplx PoleSet::gamma_sum() const noexcept {
  cplx s = 0.0;
  for (const auto& p : poles) s += p.gamma;
  return s;
}

double continuum_weight(const Model& model, double lambda, const Tolerances& tol) {
  if (model.half_line() && !(lambda > 0.0))
    throw DomainError("continuum_weight: lambda outside the open support");
  if (!std::isfinite(lambda)) throw DomainError("continuum_weight: non-finite lambda");
  const auto t = hilbert(model, lambda, TransformMethod::Auto, tol);
  const double shift = model.alpha() - lambda - kPi * t.sigma;
  const double width = kPi * t.eta_at;
  if (t.eta_at == 0.0) return 0.0;
  return t.eta_at / (shift * shift + width * width);
}

double bound_threshold(const Model& model, const Tolerances& tol) {
  if (!model.half_line()) throw WrongSupportError("bound_threshold requires a half-line profile");
  if (model.eta_analytic(0.0).real() > 0.0) return kInf;
  auto f = [&](double e) { return model.eta(e) / e; };
  return quad::require(quad::integrate(f, 0.0, kInf, quad_options(tol)), "bound threshold");
}

std::optional<BoundState> bound_state(const Model& model, const Tolerances& tol) {
  if (!model.half_line()) throw WrongSupportError("bound_state requires a half-line profile");
  const double a = model.alpha();
  auto f = [&](double l) { return a - l - kPi * hilbert_half(model, l, TransformMethod::Auto, tol).sigma; };

  double hi = -tol.bracket_eps;
  double lo = -1.0;
  if (f(hi) >= 0.0) {
    // eta(0) = 0: alpha at or above the (finite) threshold, no bound state
    if (model.eta_analytic(0.0).real() <= 0.0) return std::nullopt;
    // eta(0) > 0: the root exists but hugs the threshold (|l0| ~ exp(-alpha/eta(0)))
    while (f(hi) >= 0.0) {
      lo = hi;
      hi *= 1e-8;
      if (-hi < std::numeric_limits<double>::min())
        throw NumericError("bound state lies closer to the threshold than double precision resolves");
    }
  }

  while (f(lo) <= 0.0) {
    lo *= 2.0;
    if (-lo > tol.bracket_max)
      throw BracketExhaustedError("bound state below -" + std::to_string(tol.bracket_max) +
                                  "; enlarge bracket_max");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  BoundState b;
  b.lambda0 = 0.5 * (lo + hi);
  // quadrature cannot resolve the 1/|l| peak of the integrand this close to 0
  const auto how = -b.lambda0 < tol.bracket_eps ? TransformMethod::ClosedForm : TransformMethod::Quadrature;
  const double d = hilbert_half_deriv(model, b.lambda0, how, tol);
  b.weight0 = 1.0 / (1.0 + kPi * d);
  return b;
}

PoleSet resonance_poles(const Model& model, int max_poles, const Tolerances& tol) {
  const double a = model.alpha();
  std::vector<cplx> seeds;

  if (!model.half_line() || a > 0.0) {
    const auto t = hilbert(model, a, TransformMethod::Auto, tol);
    seeds.push_back(cplx(a - kPi * t.sigma, -kPi * t.eta_at));
  }
  // Each pole q of order m of the continued xi (residue r = 2i c_m) spawns m roots
  // near q + (pi r / (alpha - q))^(1/m).
  for (const auto& p : model.lower_poles()) {
    const int mult = p.multiplicity();
    const cplx r = 2.0 * kI * p.laurent.back();
    const cplx base = std::pow(kPi * r / (a - p.location), 1.0 / mult);
    for (int k = 0; k < mult; ++k) seeds.push_back(p.location + base * std::polar(1.0, 2.0 * kPi * k / mult));
  }

  PoleSet out;
  auto polish = [&](cplx s, bool report) {
    const auto res = newton(model, s, tol);
    if (!res.ok) {
      if (report) out.failures.push_back("Newton did not converge from seed " + fmt_c(s));
      return;
    }
    const cplx z = res.z;
    if (!(z.imag() < 0.0)) return;
    if (model.half_line() && !(z.real() > 0.0)) return;  // behind the cut
    for (const auto& q : out.poles)
      if (std::abs(q.lambda0 - z) <= tol.dedup_radius * (1.0 + std::abs(z))) return;
    out.poles.push_back({z, 0.0});
  };
  // on the half line the argument-principle count below is the completeness check
  for (const cplx& s : seeds) polish(s, !model.half_line());

  // Half line: the equation is transcendental, so the seeds above can miss
  // roots. Sweep lattices until the argument principle is satisfied.
  if (model.half_line()) {
    const double scale = model.energy_scale() + std::abs(a);
    const double r = 8.0 * scale;
    const int expected = count_half_line_roots(model, r);
    for (int n : {6, 16, 40}) {
      if (static_cast<int>(out.poles.size()) >= expected) break;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          polish(cplx(r * (i + 0.5) / n, -r * (j + 0.5) / n), false);
    }
    if (static_cast<int>(out.poles.size()) < expected)
      out.failures.push_back("argument principle counts " + std::to_string(expected) + " roots, found " +
                             std::to_string(out.poles.size()));
  }
  std::stable_sort(out.poles.begin(), out.poles.end(), [](const ResonancePole& x, const ResonancePole& y) {
    return std::abs(x.lambda0.imag()) < std::abs(y.lambda0.imag());
  });
  if (static_cast<int>(out.poles.size()) > max_poles) out.poles.resize(max_poles);
  if (out.poles.empty() && !model.half_line()) throw NumericError("no resonance poles found");
  return out;
}

PoleSet pole_weights(const Model& model, PoleSet poles, const Tolerances& tol) {
  for (auto& p : poles.poles) {
    const cplx denom = 1.0 + kPi * xi_continued_derivative(model, p.lambda0);
    if (std::abs(denom) < tol.degenerate_root)
      throw DegenerateRootError("double root at " + fmt_c(p.lambda0) + ": |1 + pi xi'| below tolerance");
    p.gamma = 1.0 / denom;
  }
  return poles;
}

PoleSet poles_with_weights(const Model& model, int max_poles, const Tolerances& tol) {
  return pole_weights(model, resonance_poles(model, max_poles, tol), tol);
}

std::vector<Feature> weight_features(const Model& model, const Tolerances& tol) {
  std::vector<Feature> f;
  const double a = model.alpha();
  const double scale = model.energy_scale();
  const double eta_a = model.eta(a);
  f.push_back({a, std::max(kPi * eta_a, 1e-6 * scale)});
  if (!model.half_line() || a > 0.0) {
    const auto t = hilbert(model, a, TransformMethod::Auto, tol);
    f.push_back({a - kPi * t.sigma, std::max(kPi * t.eta_at, 1e-6 * scale)});
  }
  try {
    for (const auto& p : resonance_poles(model, 64, tol).poles)
      f.push_back({p.lambda0.real(), std::max(std::abs(p.lambda0.imag()), 1e-6 * scale)});
  } catch (const NumericError&) {
  }
  for (const auto& p : model.poles())
    f.push_back({p.location.real(), std::max(std::abs(p.location.imag()), 1e-6 * scale)});
  return f;
}

double continuum_mass(const Model& model, const Tolerances& tol) {
  const double lo = model.half_line() ? 0.0 : -kInf;
  std::vector<double> br{lo, kInf};
  for (const auto& ft : weight_features(model, tol))
    for (double k : {-4.0, -1.0, 0.0, 1.0, 4.0}) {
      const double x = ft.centre + k * ft.width;
      if (x > lo) br.push_back(x);
    }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  auto w = [&](double l) { return continuum_weight(model, l, tol); };
  return quad::require(quad::integrate_pieces(w, br, quad_options(tol)), "continuum weight");
}

double completeness(const Model& model, const Tolerances& tol) {
  double total = continuum_mass(model, tol);
  if (model.half_line())
    if (auto b = bound_state(model, tol)) total += b->weight0;
  return std::abs(total - 1.0);
}

SpectralData spectrum(const Model& model, const std::vector<double>& grid, const Tolerances& tol) {
  SpectralData s;
  for (double l : grid) {
    if (model.half_line() && !(l > 0.0)) continue;
    s.lambda.push_back(l);
    s.weight.push_back(continuum_weight(model, l, tol));
  }
  if (model.half_line()) s.bound_state = bound_state(model, tol);
  s.completeness_residual = completeness(model, tol);
  return s;
}

}  // namespace decaylab
