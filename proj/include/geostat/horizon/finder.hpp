#pragma once

#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/surface.hpp"
#include "geostat/horizon/constants.hpp"

namespace geostat {

struct FinderOptions {
  int ntheta = 64;
  int nphi = 128;
  int lmax = 32;
  // Radius-relative residual tolerance: convergence requires
  // max |residual| * rbar / 2 < tol in solver units.
  double tol = 1e-7;
  int max_iterations = 100000;
  double collapse_floor = 1e-3;  // fraction of the initial radius
  bool verbose = false;
};

enum class FindStatus { Converged, CollapseTowardHole, NoConvergence };

const char* find_status_name(FindStatus status);

struct HorizonResult {
  RadialSurface surface;      // physical coordinates
  double area_g = 0.0;
  double area_error = 0.0;
  double residual_max = 0.0;  // physical units (1/length)
  std::vector<int> enclosed_holes;
  double annulus_inner = 0.0;  // alpha_j beta_j / (4 C1 (alpha_j + beta_j))
  double annulus_outer = 0.0;  // 2 C1 sqrt(Area_g / pi)
  int annulus_hole = -1;
  int center_hole = -1;
  int iterations = 0;
  double mean_radius = 0.0;
};

struct FindOutcome {
  FindStatus status = FindStatus::NoConvergence;
  HorizonResult result;
  std::string note;
};

// Damped normal flow of a radial graph from a large initial sphere inward,
// preconditioned mode-by-mode in spherical harmonics; the first stationary
// surface reached is taken as outermost.  The solve runs in coordinates
// rescaled by init_radius/2 about the center.
FindOutcome find_horizon(const HoleSet& holes, const Vec3& center, double init_radius,
                         const FinderOptions& options = {}, const Constants* constants = nullptr);

struct OutermostResult {
  std::vector<HorizonResult> horizons;
  std::vector<std::string> attempts;  // per-candidate log
  // Converged surfaces enclosing no hole (conjecture counterexample candidates).
  std::vector<HorizonResult> no_hole_surfaces;
  bool merged = false;  // true when any surface encloses more than one hole
};

// Per-hole searches plus merged-cluster searches; cluster surfaces that
// enclose several holes supersede the per-hole ones they swallow.
// Requires strict Brill-Lindquist data.
OutermostResult find_outermost(const HoleSet& holes, const FinderOptions& options = {},
                               const Constants* constants = nullptr);

}  // namespace geostat
