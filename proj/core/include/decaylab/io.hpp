#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decaylab/oracle.hpp"
#include "decaylab/profiles.hpp"
#include "decaylab/spectral.hpp"
#include "decaylab/survival.hpp"
#include "decaylab/tailfit.hpp"

namespace decaylab::io {

/// Parse a model config (JSON text). Throws ValidationError on malformed input;
/// the spec itself is not validated here.
ModelSpec parse_model(const std::string& json_text);
ModelSpec load_model(const std::string& path);

/// Config JSON for a spec; parse_model(model_to_json(s)) == s.
std::string model_to_json(const ModelSpec& spec);

/// %.17g, the formatting used for every number written by this library.
std::string format_double(double v);

/// CSV with header t,re_a,im_a,w.
std::string series_to_csv(const AmplitudeSeries& series);
std::string series_to_json(const AmplitudeSeries& series);

/// {"poles":[...], "bound":{...}|null, "completeness_residual":...}
std::string spectral_record(const PoleSet* poles, const std::optional<BoundState>& bound, double completeness_residual);

/// {"lambda":[...], "weight":[...], "bound":..., "completeness_residual":...}
std::string spectrum_to_json(const SpectralData& data);

/// {"window":[t_lo,t_hi],"slope":..,"slope_err":..,"exponential_rejected":..}
std::string tail_report_json(const TailFitReport& report);

/// k,lambda_k,weight_k
std::string eigen_csv(const EigenPairs& eig);

void write_file(const std::string& path, const std::string& content);

}  // namespace decaylab::io
