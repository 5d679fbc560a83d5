#pragma once

#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/surface.hpp"
#include "geostat/horizon/constants.hpp"

namespace geostat {

struct MonotonicityOptions {
  int samples = 24;        // log grid in s
  double scale = 0.0;      // 0: use the surface mean radius
  double tolerance = 1e-3;
  // Default: sample |K_g| around the surface and take i0 = 1/sqrt(kappa),
  // both in physical units.  When false, constants.kappa and constants.i0
  // are used verbatim in the scaled frame.
  bool local_bounds = true;
};

struct MonotonicityReport {
  double scale = 0.0;
  double kappa = 0.0;      // bound used, in the scaled frame
  double i0 = 0.0;
  std::string bounds_source;
  double s_min = 0.0, s_max = 0.0;
  std::vector<double> s;
  std::vector<double> area;      // Area(B_{s,g}(x0) cap Sigma), scaled frame
  std::vector<double> value;     // e^{2 sqrt(kappa) s} s^{-2} Area
  std::vector<double> floor_;    // pi e^{-2 sqrt(kappa) s} s^2
  bool nondecreasing = false;
  bool floor_pass = false;
  double tolerance = 0.0;
};

// Samples the Colding-Minicozzi monotone quantity on intrinsic balls of the
// surface about grid point (j0, k0), with intrinsic distances approximated
// from above by shortest paths in a chord graph on the grid.
// Throws RangeEmpty when the admissible s-interval is degenerate.
MonotonicityReport monotonicity_check(const HoleSet& holes, const RadialSurface& surface, int j0,
                                      int k0, const Constants& constants,
                                      const MonotonicityOptions& options = {});

}  // namespace geostat
