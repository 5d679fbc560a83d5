#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

struct Ball {
  Vec3 center;
  double radius = 0.0;
};

struct Region {
  Ball outer;
  std::vector<Ball> excluded;
};

struct RegionIssue {
  std::string message;
};

// Excluded balls must be pairwise disjoint and contained in the outer ball;
// violations are reported, not fatal.
std::vector<RegionIssue> check_region(const Region& region);

struct VolumeResult {
  double volume = 0.0;      // g-volume: integral of Psi^3
  double error = 0.0;       // one-sigma estimate
  double volume_flat = 0.0; // same sampling, Psi = 1
  double accepted_fraction = 0.0;
  int stratified_holes = 0;
  std::vector<RegionIssue> issues;
};

struct VolumeBudget {
  std::uint64_t points = 1u << 20;
  int replicates = 8;
  std::uint64_t seed = 2024;
};

// Scrambled-Sobol integral of Psi^3 over the region, rejection on excluded
// balls, with per-hole spherical-shell stratification where the integrand is
// radially singular.  Throws EmptyRegion and DivergentVolume.
VolumeResult region_volume(const HoleSet& holes, const Region& region,
                           const VolumeBudget& budget = {});

// Deterministic product quadrature of Psi^3 over the shell r0 < |x-c| < r1
// (log-radial Gauss panels times a spherical grid).
double shell_g_volume(const HoleSet& holes, const Vec3& center, double r0, double r1,
                      double* error_out = nullptr);

// Quadrature of Psi^2 over the round sphere |x-c| = r.
double sphere_g_area(const HoleSet& holes, const Vec3& center, double r);

}  // namespace geostat
