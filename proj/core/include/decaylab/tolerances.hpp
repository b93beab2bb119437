#pragma once

#include <string>
#include <string_view>

namespace decaylab {

/// Numerical tolerances shared by every module. The named profiles scale the
/// defaults uniformly; individual fields may be overridden afterwards.
struct Tolerances {
  double quad_abs = 1e-12;        // adaptive Gauss-Kronrod, absolute
  double quad_rel = 1e-11;        // adaptive Gauss-Kronrod, relative
  int quad_max_intervals = 4000;
  double transform = 1e-8;        // target accuracy of transform values
  double newton = 1e-12;          // |dz| < newton * (1 + |z|)
  int newton_max_iter = 100;
  double dedup_radius = 1e-8;
  double degenerate_root = 1e-10; // |1 + pi xi'| below this is a double root
  double bracket_eps = 1e-12;     // upper bisection bracket end is -bracket_eps
  double bracket_max = 1e8;       // growth limit of the lower bracket end
  double panel = 1e-13;           // oscillatory panel interpolation error
  int max_panels = 200000;
  double completeness = 1e-6;

  static Tolerances strict();
  static Tolerances defaults() { return {}; }
  static Tolerances fast();

  /// Profile by name: "strict", "default" or "fast". Throws ValidationError.
  static Tolerances named(std::string_view name);

  /// Profile selected by the DECAYLAB_TOL environment variable (default when unset).
  static Tolerances from_env();
};

}  // namespace decaylab
