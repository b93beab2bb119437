#include "decaylab/tolerances.hpp"

#include <cstdlib>

#include "decaylab/errors.hpp"

namespace decaylab {

namespace {

Tolerances scaled(double factor) {
  Tolerances t;
  t.quad_abs *= factor;
  t.quad_rel *= factor;
  t.transform *= factor;
  t.panel *= factor;
  t.completeness *= factor;
  return t;
}

}  // namespace

Tolerances Tolerances::strict() {
  Tolerances t = scaled(0.01);
  t.quad_max_intervals = 20000;
  return t;
}

Tolerances Tolerances::fast() {
  Tolerances t = scaled(100.0);
  t.quad_max_intervals = 1000;
  return t;
}

Tolerances Tolerances::named(std::string_view name) {
  if (name == "strict") return strict();
  if (name == "default") return defaults();
  if (name == "fast") return fast();
  throw ValidationError({"unknown tolerance profile '" + std::string(name) +
                         "' (expected strict, default or fast)"});
}

Tolerances Tolerances::from_env() {
  const char* value = std::getenv("DECAYLAB_TOL");
  if (value == nullptr || *value == '\0') return defaults();
  return named(value);
}

}  // namespace decaylab
