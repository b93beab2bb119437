#include "decaylab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decaylab/errors.hpp"
#include "decaylab/io.hpp"
#include "decaylab/oracle.hpp"
#include "decaylab/profiles.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/survival.hpp"
#include "decaylab/tailfit.hpp"
#include "decaylab/theorems.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  bool log = false;
  double t0 = 0.0, t1 = 0.0;
  int n = 0;

  std::vector<double> points() const { return log ? log_grid(t0, t1, n) : linear_grid(t0, t1, n); }
};

// "linear:t0,t1,n" | "log:t0,t1,n"
Grid parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("grid must look like linear:t0,t1,n or log:t0,t1,n");
  Grid g;
  const std::string kind = text.substr(0, colon);
  if (kind == "log")
    g.log = true;
  else if (kind != "linear")
    throw UsageError("unknown grid kind '" + kind + "'");
  std::istringstream is(text.substr(colon + 1));
  char c1 = 0, c2 = 0;
  if (!(is >> g.t0 >> c1 >> g.t1 >> c2 >> g.n) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
    throw UsageError("malformed grid '" + text + "'");
  // value invariants are validation failures, not usage errors
  if (!(g.t0 < g.t1) || g.n < 2) throw ValidationError({"grid needs t0 < t1 and n >= 2"});
  if (g.log && !(g.t0 > 0.0)) throw ValidationError({"log grid needs t0 > 0"});
  return g;
}

std::pair<double, double> parse_window(const std::string& text) {
  std::istringstream is(text);
  double a = 0, b = 0;
  char c = 0;
  if (!(is >> a >> c >> b) || c != ',' || !(is >> std::ws).eof()) throw UsageError("window must look like a,b");
  return {a, b};
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

struct Options {
  std::string model_path;
  std::string tol_name;
  std::string out_path;
  std::string format;
  std::string method = "quad";
  std::string grid;
  std::string window;
  int n = 2000;
  double e_max = 0.0;
  int points = 40;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  Tolerances tolerances() const { return o_.tol_name.empty() ? Tolerances::from_env() : Tolerances::named(o_.tol_name); }

  Model model() const {
    if (o_.model_path.empty()) throw UsageError("--model is required");
    return Model(io::load_model(o_.model_path));
  }

  // to --out when given, else to stdout
  void emit(const std::string& text) const {
    if (o_.out_path.empty())
      out_ << text;
    else
      io::write_file(o_.out_path, text);
  }

  double default_emax(const Model& m) const { return o_.e_max > 0 ? o_.e_max : 50.0 * m.energy_scale(); }

  int describe() const {
    if (o_.model_path.empty()) throw UsageError("--model is required");
    const ModelSpec spec = io::load_model(o_.model_path);
    const auto diags = validate(spec);
    for (const auto& d : diags) err_ << "diagnostic: " << d << "\n";
    if (!diags.empty()) return kValidation;
    emit(io::model_to_json(spec));
    return kOk;
  }

  AmplitudeSeries series(const Model& m, const std::string& method, const std::vector<double>& times) const {
    const Tolerances tol = tolerances();
    if (method == "closed") return survival_flat_closed(m, times);
    if (method == "quad") return survival_quadrature(m, times, tol);
    if (method == "golden") return survival_golden_rule(m, times, tol);
    if (method == "poles") return survival_pole_sum(m, poles_with_weights(m, 32, tol), times);
    if (method == "decomposed") return survival_decomposed(m, times, tol);
    if (method == "oracle") {
      const auto dm = discretize(m, o_.n, default_emax(m), tol);
      for (const auto& d : dm.diagnostics) err_ << "warning: " << d << "\n";
      return survival_discrete(dm, diagonalize(dm), times);
    }
    throw UsageError("unknown method '" + method + "'");
  }

  int survival() const {
    const Model m = model();
    const Grid g = parse_grid(o_.grid.empty() ? "linear:0,10,101" : o_.grid);
    const auto s = series(m, o_.method, g.points());
    emit(o_.format == "json" ? io::series_to_json(s) : io::series_to_csv(s));
    return kOk;
  }

  int poles() const {
    const Model m = model();
    const Tolerances tol = tolerances();
    const PoleSet ps = poles_with_weights(m, 32, tol);
    for (const auto& f : ps.failures) err_ << "warning: " << f << "\n";
    std::optional<BoundState> b;
    if (m.half_line()) b = bound_state(m, tol);
    emit(io::spectral_record(&ps, b, completeness(m, tol)));
    return kOk;
  }

  int bound() const {
    const Model m = model();
    const Tolerances tol = tolerances();
    // a spectrum unbounded below has no bound state
    std::optional<BoundState> b;
    if (m.half_line()) b = bound_state(m, tol);
    emit(io::spectral_record(nullptr, b, completeness(m, tol)));
    return kOk;
  }

  int spectrum() const {
    const Model m = model();
    const double s = m.energy_scale();
    std::string spec = o_.grid;
    if (spec.empty()) {
      char buf[128];
      if (m.half_line())
        std::snprintf(buf, sizeof buf, "linear:0,%.17g,401", 10 * s);
      else
        std::snprintf(buf, sizeof buf, "linear:%.17g,%.17g,401", m.alpha() - 10 * s, m.alpha() + 10 * s);
      spec = buf;
    }
    const auto data = decaylab::spectrum(m, parse_grid(spec).points(), tolerances());
    if (o_.format == "csv") {
      std::string text = "lambda,weight\n";
      for (std::size_t i = 0; i < data.lambda.size(); ++i)
        text += io::format_double(data.lambda[i]) + "," + io::format_double(data.weight[i]) + "\n";
      emit(text);
    } else {
      emit(io::spectrum_to_json(data));
    }
    return kOk;
  }

  int oracle_compare() const {
    const Model m = model();
    const Tolerances tol = tolerances();
    const auto times = parse_grid(o_.grid.empty() ? "linear:0,10,101" : o_.grid).points();
    const double e_max = default_emax(m);
    const auto dm = discretize(m, o_.n, e_max, tol);
    const auto eig = diagonalize(dm);
    const auto disc = survival_discrete(dm, eig, times);
    const auto ref = survival_quadrature(m, times, tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) worst = std::max(worst, std::abs(disc.amplitude[i] - ref.amplitude[i]));

    std::ostringstream os;
    os << "{\"n\":" << o_.n << ",\"e_max\":" << io::format_double(e_max)
       << ",\"t_max\":" << io::format_double(times.back()) << ",\"max_abs_error\":" << io::format_double(worst)
       << ",\"lowest_eigenvalue\":" << io::format_double(eig.values(0))
       << ",\"eigen_residual\":" << io::format_double(eig.residual)
       << ",\"recurrence_time\":" << io::format_double(recurrence_time(dm)) << ",\"diagnostics\":[";
    for (std::size_t i = 0; i < dm.diagnostics.size(); ++i) os << (i ? "," : "") << quoted(dm.diagnostics[i]);
    os << "]}\n";
    out_ << os.str();
    if (!o_.out_path.empty()) io::write_file(o_.out_path, io::eigen_csv(eig));
    return kOk;
  }

  int tail_fit() const {
    const Model m = model();
    if (o_.window.empty()) throw UsageError("--window a,b is required");
    const auto [a, b] = parse_window(o_.window);
    if (!(a > 0.0) || !(a < b)) throw ValidationError({"window needs 0 < a < b"});
    const std::string method = o_.method.empty() ? (m.half_line() ? "decomposed" : "quad") : o_.method;
    const auto s = series(m, method, log_grid(a, b, o_.points));
    emit(io::tail_report_json(tail_slope(s, a, b)));
    return kOk;
  }

  int theorems() const {
    const Model m = model();
    const auto report = run_theorems(m, tolerances());
    std::ostringstream os;
    if (o_.format == "json") {
      os << "{\"checks\":[";
      for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        os << (i ? "," : "") << "{\"name\":" << quoted(c.name) << ",\"residual\":" << io::format_double(c.residual)
           << ",\"threshold\":" << io::format_double(c.threshold) << ",\"passed\":" << (c.passed ? "true" : "false")
           << ",\"skipped\":" << (c.skipped ? "true" : "false") << "}";
      }
      os << "],\"all_passed\":" << (report.all_passed() ? "true" : "false") << "}\n";
    } else {
      char line[256];
      for (const auto& c : report.checks) {
        if (c.skipped)
          std::snprintf(line, sizeof line, "%-26s %-10s %-10s SKIP  %s\n", c.name.c_str(), "-", "-", c.note.c_str());
        else
          std::snprintf(line, sizeof line, "%-26s %-10.3e %-10.1e %s\n", c.name.c_str(), c.residual, c.threshold,
                        c.passed ? "PASS" : "FAIL");
        os << line;
      }
    }
    emit(os.str());
    return report.all_passed() ? kOk : kNumeric;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"decaylab - survival amplitudes of a discrete level coupled to a continuum"};
  app.name("decaylab");
  app.require_subcommand(1);
  app.add_option("--model", o.model_path, "model config (JSON)");
  app.add_option("--tol", o.tol_name, "tolerance profile (default: $DECAYLAB_TOL or 'default')")
      ->check(CLI::IsMember({"strict", "default", "fast"}));
  app.add_option("--out", o.out_path, "write the result here instead of stdout");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* describe = app.add_subcommand("describe", "validate a model and echo it as config JSON");
  auto* survival = app.add_subcommand("survival", "amplitude series on a time grid");
  survival->add_option("--method", o.method, "closed|quad|golden|poles|oracle|decomposed")
      ->check(CLI::IsMember({"closed", "quad", "golden", "poles", "oracle", "decomposed"}));
  survival->add_option("--grid", o.grid, "linear:t0,t1,n or log:t0,t1,n");
  survival->add_option("--n", o.n, "oracle grid size")->check(CLI::Range(2, 20000));
  survival->add_option("--emax", o.e_max, "oracle half-window")->check(CLI::PositiveNumber);
  auto* poles = app.add_subcommand("poles", "resonance poles and weights");
  auto* bound = app.add_subcommand("bound", "bound state below the continuum");
  auto* spectrum = app.add_subcommand("spectrum", "tabulate the continuum weight");
  spectrum->add_option("--grid", o.grid, "energy grid, linear:e0,e1,n");
  auto* oracle = app.add_subcommand("oracle-compare", "discretised Hamiltonian vs quadrature");
  oracle->add_option("--n", o.n, "grid size")->check(CLI::Range(2, 20000));
  oracle->add_option("--emax", o.e_max, "half-window")->check(CLI::PositiveNumber);
  oracle->add_option("--grid", o.grid, "time grid");
  auto* tail = app.add_subcommand("tail-fit", "log-log slope of |A| on a late window");
  tail->add_option("--window", o.window, "t_lo,t_hi")->required();
  tail->add_option("--points", o.points, "log-spaced samples")->check(CLI::Range(8, 100000));
  tail->add_option("--method", o.method, "amplitude method")
      ->check(CLI::IsMember({"quad", "poles", "oracle", "decomposed"}));
  auto* theorems = app.add_subcommand("theorems", "transform identities on the model's density");
  for (auto* s : {describe, survival, poles, bound, spectrum, oracle, tail, theorems}) s->fallthrough();

  // tail-fit picks its own default method
  bool method_given = false;
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
    method_given = tail->count("--method") > 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  if (*tail && !method_given) o.method.clear();

  Runner r(o, out, err);
  try {
    if (*describe) return r.describe();
    if (*survival) return r.survival();
    if (*poles) return r.poles();
    if (*bound) return r.bound();
    if (*spectrum) return r.spectrum();
    if (*oracle) return r.oracle_compare();
    if (*tail) return r.tail_fit();
    if (*theorems) return r.theorems();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const WrongModelError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const WrongSupportError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace decaylab::cli
