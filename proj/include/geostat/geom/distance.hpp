#pragma once

#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/volume.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

struct DistanceOptions {
  int nodes = 200;
  int sweeps = 80;
  double improve_tol = 1e-10;  // relative per-sweep improvement cutoff
};

struct DistanceResult {
  double upper = 0.0;        // certified upper bound on d_g (feasible path length)
  double flat = 0.0;         // |x - y|
  double path_flat = 0.0;    // flat length of the relaxed path
  int repairs = 0;
  std::vector<Vec3> path;
};

// Upper bound on the g-distance between x and y among paths avoiding the
// excluded balls: Euclidean segment plus at-most-semicircular detour arcs as
// the initializer, then per-node descent on the g-length.
// Throws Unreachable when an endpoint sits inside an excluded ball.
DistanceResult distance_upper(const HoleSet& holes, const Vec3& x, const Vec3& y,
                              const std::vector<Ball>& excluded = {},
                              const DistanceOptions& options = {});

}  // namespace geostat
