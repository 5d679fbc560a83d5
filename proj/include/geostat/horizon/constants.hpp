#pragma once

#include <string>

#include "geostat/core/hole_set.hpp"

namespace geostat {

// Universal-constant bookkeeping:
//   s0   = 1/2 min{ i0, 1/sqrt(kappa), 1/3 }
//   C1   = 1 + 2 e / s0
//   eps0 = sqrt(2 / (pi C1^2))
// kappa and i0 live on the unit-scale reference annulus.  No canonical
// numeric values exist for them, so they are explicit inputs with a
// documented default, and every verdict that depends on C1 reports the C1
// in effect.
struct Constants {
  double kappa = 0.0;
  double i0 = 0.0;
  double s0 = 0.0;
  double C1 = 0.0;
  double eps0 = 0.0;
  std::string source;  // "explicit" or a description of the auto estimate
};

Constants constants(double kappa, double i0);

// Default: kappa from the sampled annulus curvature maxima over all holes
// (scale c = sigma_i/10 with neighbours, c = alpha_i+beta_i for one hole)
// and i0 = min{1/sqrt(kappa), 1/3}.
Constants auto_constants(const HoleSet& holes);

}  // namespace geostat
