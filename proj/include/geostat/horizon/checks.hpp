#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/horizon/constants.hpp"
#include "geostat/horizon/finder.hpp"

namespace geostat {

// 2 pi chi(Sigma) (max |grad Psi|^2 / Psi^4)^{-1} with chi(Sigma) = 2
// (outward-minimizing surfaces here are spheres).
double area_lower_bound(const HoleSet& holes, const RadialSurface& surface);

struct PenroseReport {
  double mass = 0.0;
  double total_area = 0.0;
  double rhs = 0.0;    // sqrt(total_area / 16 pi)
  double slack = 0.0;  // mass - rhs
  bool pass = false;
  // Prop: 16 pi m^2 >= 4 pi (max |grad Psi|^2/Psi^4)^{-1}, per horizon.
  struct MassBelow {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
  };
  std::vector<MassBelow> mass_below;
  bool pass_mass_below = false;
};

PenroseReport penrose_check(const HoleSet& holes, const std::vector<HorizonResult>& horizons);

struct LocateCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LocateReport {
  bool gate_applicable = false;  // m < sigma / (20 C1)
  double mass = 0.0;
  double sigma = 0.0;
  double C1 = 0.0;
  bool sigma_defined = true;
  std::vector<std::vector<LocateCheck>> per_horizon;
  std::vector<double> gamma_j;  // per hole; 0 when no surface is assigned
  bool gamma_bound_pass = false;  // gamma_j <= 8 C1 m
  bool disjoint_pass = false;
  bool all_pass = false;  // all applicable checks
};

LocateReport locate_checks(const HoleSet& holes, const std::vector<HorizonResult>& horizons,
                           const Constants& constants);

// Area floor for a minimal strip crossing the shells C1 r <= |x - p| <= 2 C1 r
// (unit-scale statement Area >= pi e^{-2} s0^2, rescaled by (C1 r)^2).
struct StripFloorReport {
  bool applicable = false;  // surface actually crosses both shells
  double clipped_area = 0.0;
  double floor = 0.0;
  bool pass = false;
};

StripFloorReport strip_floor_check(const HoleSet& holes, const RadialSurface& surface,
                                   const Vec3& p, double r, const Constants& constants);

}  // namespace geostat
