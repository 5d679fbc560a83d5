#pragma once

#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/surface.hpp"

namespace geostat::io {

// phi = 0 / phi = pi cross-section of a radial surface, with hole markers.
std::string horizon_cross_section_svg(const RadialSurface& surface, const HoleSet& holes);

// Log-log scatter + polyline, for the convergence tables.
std::string loglog_svg(const std::vector<double>& x, const std::vector<double>& y,
                       const std::string& x_label, const std::string& y_label);

}  // namespace geostat::io
