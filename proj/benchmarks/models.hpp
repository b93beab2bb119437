#pragma once

#include "decaylab/profiles.hpp"

namespace bench {

inline decaylab::Model lorentzian() {
  return decaylab::Model({1.0, decaylab::CouplingProfile::rational(0.1, {1.0}, {1.0, 0.0, 1.0},
                                                                   decaylab::Support::FullLine)});
}

inline decaylab::Model case1() {
  return decaylab::Model({0.5, decaylab::CouplingProfile::rational(0.5, {1.0}, {1.0, 0.0, 1.0},
                                                                   decaylab::Support::HalfLine)});
}

inline decaylab::Model case2() {
  return decaylab::Model({1.0, decaylab::CouplingProfile::rational(0.4, {0.0, 1.0}, {1.0, 0.0, 2.0, 0.0, 1.0},
                                                                   decaylab::Support::HalfLine)});
}

}  // namespace bench
