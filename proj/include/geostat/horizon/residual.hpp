#pragma once

#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/surface.hpp"

namespace geostat {

// Pointwise minimal-surface residual of the radial graph:
//   H_delta(x) + 2 (grad Psi . n) / Psi,
// with H_delta the flat mean curvature of the discretized graph and n its
// outward flat unit normal.  Vanishes exactly on g-minimal surfaces.
std::vector<double> mc_residual(const HoleSet& holes, const RadialSurface& surface);

// Same, reusing precomputed surface geometry.
std::vector<double> mc_residual(const HoleSet& holes, const SurfaceGeometry& geometry);

}  // namespace geostat
