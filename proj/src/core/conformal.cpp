#include "geostat/core/conformal.hpp"

#include <cmath>
#include <sstream>

namespace geostat {

ConformalJet conformal_eval(const HoleSet& holes, const Vec3& x, int order) {
  ConformalJet jet;
  jet.point = x;
  jet.chi = 1.0;
  jet.psi = 1.0;

  for (int i = 0; i < holes.size(); ++i) {
    const Hole& h = holes[i];
    const Vec3 d = x - h.p;
    const double rho2 = norm2(d);
    const double rho = std::sqrt(rho2);
    if (rho < hole_coincidence_tolerance(h.p)) {
      std::ostringstream msg;
      msg << "point coincides with hole " << i;
      throw Error(ErrorCode::EvaluationAtHole, msg.str());
    }
    const double inv = 1.0 / rho;
    jet.chi += h.alpha * inv;
    jet.psi += h.beta * inv;
    if (order >= 1) {
      const double inv3 = inv / rho2;
      jet.grad_chi -= (h.alpha * inv3) * d;
      jet.grad_psi -= (h.beta * inv3) * d;
    }
    if (order >= 2) {
      // Hess(1/rho) = (3 d d^T - rho^2 I) / rho^5
      const double inv5 = 1.0 / (rho2 * rho2 * rho);
      Mat3 hess = Mat3::outer(d, d) * 3.0;
      hess(0, 0) -= rho2;
      hess(1, 1) -= rho2;
      hess(2, 2) -= rho2;
      jet.hess_chi += hess * (h.alpha * inv5);
      jet.hess_psi += hess * (h.beta * inv5);
    }
  }

  jet.Psi = jet.chi * jet.psi;
  if (order >= 1) jet.grad_Psi = jet.psi * jet.grad_chi + jet.chi * jet.grad_psi;
  if (order >= 2) {
    jet.hess_Psi = jet.hess_chi * jet.psi + jet.hess_psi * jet.chi +
                   Mat3::outer(jet.grad_chi, jet.grad_psi) +
                   Mat3::outer(jet.grad_psi, jet.grad_chi);
  }
  return jet;
}

LogJet log_jet(const ConformalJet& jet) {
  LogJet lj;
  lj.Psi = jet.Psi;
  lj.grad_f = jet.grad_Psi / jet.Psi;
  lj.hess_f = jet.hess_Psi * (1.0 / jet.Psi) - Mat3::outer(lj.grad_f, lj.grad_f);
  lj.lap_f = lj.hess_f.trace();
  lj.grad_f2 = norm2(lj.grad_f);
  lj.grad_u = jet.grad_psi / jet.psi - jet.grad_chi / jet.chi;
  return lj;
}

}  // namespace geostat
