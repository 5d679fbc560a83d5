#pragma once

#include "geostat/flat/ls_bound.hpp"
#include "geostat/flat/pipeline.hpp"

namespace geostat {

struct FlatDistanceEstimate {
  PipelineParams params;
  VolumeReport volumes;
  double a = 0.0;
  double hbar = 0.0;
  double D = 0.0;
  double dF_bound = 0.0;
  double dDF_bound = 0.0;
  double envelope_dF = 0.0;   // CF' R^4 sqrt(eps) + CF'' R^3 sqrt(eps)
  double envelope_dDF = 0.0;  // C_DF R^3 sqrt(eps)
  bool numeric_le_envelope = false;
};

// The full estimate for B_g(0,R) against the flat ball: horizons, gamma and
// lambda stages, region W, all volumes, then the subregion bound, next to the
// closed-form envelope with the extracted constants.
FlatDistanceEstimate main_bound(const HoleSet& holes, double R, double eps,
                                const Constants& constants,
                                const PipelineOptions& options = {},
                                const VolumeBudget& budget = {});

}  // namespace geostat
