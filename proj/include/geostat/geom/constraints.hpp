#pragma once

#include <cstdint>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/geom/metric.hpp"

namespace geostat {

struct ConstraintRow {
  Vec3 point;
  double R = 0.0;
  double two_e2 = 0.0;
  double rel_residual = 0.0;
  double div_residual = 0.0;
};

struct ConstraintReport {
  std::vector<ConstraintRow> rows;
  double max_rel_residual = 0.0;
  double max_div_residual = 0.0;
  double max_abs_R_zero_charge = 0.0;  // only meaningful when all charges vanish
  int excluded_samples = 0;
  double tolerance = 0.0;
  bool pass = false;
};

// Samples the Hamiltonian identity R = 2|E|^2_g and the divergence-free
// condition on E at random points.  The scalar curvature comes from the
// conformal Hessian route, 2|E|^2 from the potential gradient; the
// divergence check differences the analytic flux Psi * grad ln(psi/chi).
ConstraintReport verify_constraints(const HoleSet& holes, int sample_count,
                                    std::uint64_t seed = 12345, double tolerance = 1e-6);

}  // namespace geostat
