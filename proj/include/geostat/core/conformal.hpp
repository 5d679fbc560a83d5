#pragma once

#include "geostat/core/hole_set.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

// Values and exact closed-form derivatives of the conformal factors
//   chi = 1 + sum alpha_i / |x - p_i|,   psi = 1 + sum beta_i / |x - p_i|,
// and of Psi = chi * psi, at one point.  Higher-order blocks are filled only
// up to the requested order.
struct ConformalJet {
  Vec3 point;
  double chi = 0.0;
  double psi = 0.0;
  double Psi = 0.0;
  Vec3 grad_chi, grad_psi, grad_Psi;  // order >= 1
  Mat3 hess_chi, hess_psi, hess_Psi;  // order >= 2

  double metric_factor() const { return Psi * Psi; }
};

// order in {0, 1, 2}.  Throws EvaluationAtHole if x coincides with a hole
// within hole_coincidence_tolerance.
ConformalJet conformal_eval(const HoleSet& holes, const Vec3& x, int order = 2);

// Log-conformal data f = ln Psi derived from an order-2 jet, plus the
// electrostatic potential gradient; shared by the curvature formulas.
struct LogJet {
  double Psi = 0.0;
  Vec3 grad_f;       // grad ln Psi
  Mat3 hess_f;       // Hessian of ln Psi
  double lap_f = 0.0;
  double grad_f2 = 0.0;  // |grad f|^2
  Vec3 grad_u;       // grad ln(psi/chi), the electric potential gradient
};

LogJet log_jet(const ConformalJet& jet);

}  // namespace geostat
