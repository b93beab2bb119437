#include "decaylab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "decaylab/errors.hpp"

namespace decaylab::io {

using nlohmann::json;

namespace {

ProfileKind parse_kind(const std::string& s) {
  if (s == "flat") return ProfileKind::Flat;
  if (s == "rational_full_line") return ProfileKind::RationalFullLine;
  if (s == "rational_half_line") return ProfileKind::RationalHalfLine;
  throw ValidationError({"unknown profile kind '" + s + "'"});
}

Support parse_support(const std::string& s) {
  if (s == "full_line") return Support::FullLine;
  if (s == "half_line") return Support::HalfLine;
  throw ValidationError({"unknown support '" + s + "'"});
}

double number(const json& j, const char* key, double fallback, bool required) {
  if (!j.contains(key)) {
    if (required) throw ValidationError({std::string("missing field '") + key + "'"});
    return fallback;
  }
  if (!j.at(key).is_number()) throw ValidationError({std::string("field '") + key + "' must be a number"});
  return j.at(key).get<double>();
}

std::vector<double> coeffs(const json& j, const char* key, std::vector<double> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& a = j.at(key);
  if (!a.is_array()) throw ValidationError({std::string("field '") + key + "' must be an array"});
  std::vector<double> out;
  for (const auto& v : a) {
    if (!v.is_number()) throw ValidationError({std::string("field '") + key + "' must hold numbers"});
    out.push_back(v.get<double>());
  }
  return out;
}

// Raw JSON number with round-trip precision.
struct Num {
  double v;
};
std::ostream& operator<<(std::ostream& os, Num n) { return os << format_double(n.v); }

std::string pole_array(const PoleSet& poles) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < poles.poles.size(); ++i) {
    const auto& p = poles.poles[i];
    if (i) os << ",";
    os << "{\"re\":" << Num{p.lambda0.real()} << ",\"im\":" << Num{p.lambda0.imag()}
       << ",\"gamma_re\":" << Num{p.gamma.real()} << ",\"gamma_im\":" << Num{p.gamma.imag()} << "}";
  }
  os << "]";
  return os.str();
}

std::string bound_json(const std::optional<BoundState>& b) {
  if (!b) return "null";
  std::ostringstream os;
  os << "{\"lambda0\":" << Num{b->lambda0} << ",\"weight\":" << Num{b->weight0} << "}";
  return os.str();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ModelSpec parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("malformed JSON: ") + e.what()});
  }
  if (!j.is_object()) throw ValidationError({"model config must be a JSON object"});
  ModelSpec s;
  s.alpha = number(j, "alpha", 0.0, true);
  s.tau = number(j, "tau", 1.0, false);
  s.hbar = number(j, "hbar", 1.0, false);
  if (!j.contains("profile") || !j.at("profile").is_object()) throw ValidationError({"missing object 'profile'"});
  const auto& p = j.at("profile");
  if (!p.contains("kind") || !p.at("kind").is_string()) throw ValidationError({"missing string 'profile.kind'"});
  s.profile.kind = parse_kind(p.at("kind").get<std::string>());
  s.profile.strength = number(p, "strength", 0.0, true);
  s.profile.num = coeffs(p, "num", {1.0});
  s.profile.den = coeffs(p, "den", {1.0});
  const std::string default_support = s.profile.kind == ProfileKind::RationalHalfLine ? "half_line" : "full_line";
  if (p.contains("support") && !p.at("support").is_string()) throw ValidationError({"'profile.support' must be a string"});
  s.profile.support = parse_support(p.value("support", default_support));
  s.profile.log_scale_c = number(p, "log_scale_c", 1.0, false);
  return s;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open model file '" + path + "'"});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string model_to_json(const ModelSpec& s) {
  std::ostringstream os;
  auto arr = [&](const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
    return out + "]";
  };
  os << "{\n"
     << "  \"alpha\": " << Num{s.alpha} << ",\n"
     << "  \"tau\": " << Num{s.tau} << ",\n"
     << "  \"hbar\": " << Num{s.hbar} << ",\n"
     << "  \"profile\": {\n"
     << "    \"kind\": \"" << to_string(s.profile.kind) << "\",\n"
     << "    \"strength\": " << Num{s.profile.strength} << ",\n"
     << "    \"num\": " << arr(s.profile.num) << ",\n"
     << "    \"den\": " << arr(s.profile.den) << ",\n"
     << "    \"support\": \"" << to_string(s.profile.support) << "\",\n"
     << "    \"log_scale_c\": " << Num{s.profile.log_scale_c} << "\n"
     << "  }\n"
     << "}\n";
  return os.str();
}

std::string series_to_csv(const AmplitudeSeries& s) {
  std::string out = "t,re_a,im_a,w\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += format_double(s.times[i]) + "," + format_double(s.amplitude[i].real()) + "," +
           format_double(s.amplitude[i].imag()) + "," + format_double(s.survival[i]) + "\n";
  }
  return out;
}

std::string series_to_json(const AmplitudeSeries& s) {
  std::ostringstream os;
  auto list = [&](auto&& get) {
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << Num{get(i)};
    os << "]";
  };
  os << "{\"method\":\"" << to_string(s.method) << "\",\"times\":";
  list([&](std::size_t i) { return s.times[i]; });
  os << ",\"re_a\":";
  list([&](std::size_t i) { return s.amplitude[i].real(); });
  os << ",\"im_a\":";
  list([&](std::size_t i) { return s.amplitude[i].imag(); });
  os << ",\"w\":";
  list([&](std::size_t i) { return s.survival[i]; });
  os << "}\n";
  return os.str();
}

std::string spectral_record(const PoleSet* poles, const std::optional<BoundState>& bound, double residual) {
  std::ostringstream os;
  os << "{\"poles\":" << (poles ? pole_array(*poles) : std::string("[]")) << ",\"bound\":" << bound_json(bound)
     << ",\"completeness_residual\":" << Num{residual} << "}\n";
  return os.str();
}

std::string spectrum_to_json(const SpectralData& d) {
  std::ostringstream os;
  os << "{\"lambda\":[";
  for (std::size_t i = 0; i < d.lambda.size(); ++i) os << (i ? "," : "") << Num{d.lambda[i]};
  os << "],\"weight\":[";
  for (std::size_t i = 0; i < d.weight.size(); ++i) os << (i ? "," : "") << Num{d.weight[i]};
  os << "],\"bound\":" << bound_json(d.bound_state) << ",\"completeness_residual\":" << Num{d.completeness_residual}
     << "}\n";
  return os.str();
}

std::string tail_report_json(const TailFitReport& r) {
  std::ostringstream os;
  os << "{\"window\":[" << Num{r.t_lo} << "," << Num{r.t_hi} << "],\"slope\":" << Num{r.slope}
     << ",\"slope_err\":" << Num{r.slope_err}
     << ",\"exponential_rejected\":" << (r.exponential_rejected ? "true" : "false") << "}\n";
  return os.str();
}

std::string eigen_csv(const EigenPairs& eig) {
  std::string out = "k,lambda_k,weight_k\n";
  for (int k = 0; k < eig.values.size(); ++k)
    out += std::to_string(k) + "," + format_double(eig.values[k]) + "," + format_double(eig.overlap[k]) + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace decaylab::io
