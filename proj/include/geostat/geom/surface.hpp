#pragma once

#include <memory>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/sphere_grid.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

// Closed surface given as a radial graph r(theta, phi) > 0 over a sphere
// about `center`, sampled on a SphereGrid.
struct RadialSurface {
  Vec3 center;
  std::shared_ptr<const SphereGrid> grid;
  std::vector<double> r;

  static RadialSurface sphere(const Vec3& center, double radius, int ntheta = 64, int nphi = 128);

  int ntheta() const { return grid->ntheta(); }
  int nphi() const { return grid->nphi(); }
  Vec3 point(int j, int k) const { return center + r[grid->idx(j, k)] * grid->dir(j, k); }
  double radius_at(double theta, double phi) const { return grid->interpolate(r, theta, phi); }
  double min_radius() const;
  double max_radius() const;
  double mean_radius() const;  // l = 0 component

  // True when the (center-relative) direction of x points inside the graph.
  bool encloses(const Vec3& x) const;
};

// First and second fundamental data of the radial graph with respect to the
// flat background metric.
struct SurfaceGeometry {
  std::vector<double> x, y, z;        // points
  std::vector<double> nx, ny, nz;     // outward Euclidean unit normal
  std::vector<double> dA;             // flat area element * quadrature weight
  std::vector<double> H;              // outward flat mean curvature
};

// Throws DegenerateGrid when the graph self-intersects (non-positive first
// fundamental form) or r <= 0 somewhere.
SurfaceGeometry surface_geometry(const RadialSurface& surface);

// Verifies the surface keeps clear of every hole; throws SurfaceThroughHole.
void check_surface_avoids_holes(const RadialSurface& surface, const HoleSet& holes);

}  // namespace geostat
