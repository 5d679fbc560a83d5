#pragma once

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/surface.hpp"

namespace geostat {

struct AreaResult {
  double area = 0.0;   // Area_g = integral of Psi^2 over the flat area element
  double error = 0.0;  // grid-refinement estimate
  double area_flat = 0.0;
};

AreaResult surface_area(const HoleSet& holes, const RadialSurface& surface);

}  // namespace geostat
