#pragma once

#include <cstdint>

#include "geostat/core/hole_set.hpp"

namespace geostat {

// Scaled pullback metric on the reference annulus 1/4 <= |u| <= 4 under
// u -> p_i + c u:  g_{c,Phi} = Psi(p_i + c u)^2 delta.
struct AnnulusMetric {
  int hole = -1;
  double c = 0.0;
  double factor_min = 0.0;  // min sampled Psi(p_i + c u)
  double factor_max = 0.0;
  double k1 = 0.0;          // min sampled factor^2
  double k2 = 0.0;          // max sampled factor^2
  double kappa_est = 0.0;   // max sampled |sectional| of g_{c,Phi}
  bool factor_at_least_one = false;
  // Same scan restricted to the inner annulus 1/2 <= |u| <= 2.
  double k1_inner = 0.0;
  double k2_inner = 0.0;
  int samples = 0;
};

struct AnnulusOptions {
  int radial = 24;
  int ntheta = 12;
  int nphi = 24;
  int random_planes = 10;
  std::uint64_t seed = 7;
};

// Throws ScaleViolatesSeparation unless sigma_i > 5c or sigma_i_out < c/5.
AnnulusMetric annulus_pullback(const HoleSet& holes, int hole, double c,
                               const AnnulusOptions& options = {});

}  // namespace geostat
