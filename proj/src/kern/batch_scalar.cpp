#include "geostat/kern/batch.hpp"

#include <cmath>

namespace geostat::kern {

void eval_batch_scalar(const HoleSoA& holes, const double* x, const double* y, const double* z,
                       std::size_t n, const JetOut& out) {
  const std::size_t nh = holes.size();
  const bool want_grad = out.dchi_x != nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    double chi = 1.0, psi = 1.0;
    double gcx = 0.0, gcy = 0.0, gcz = 0.0;
    double gpx = 0.0, gpy = 0.0, gpz = 0.0;
    for (std::size_t h = 0; h < nh; ++h) {
      const double dx = x[i] - holes.px[h];
      const double dy = y[i] - holes.py[h];
      const double dz = z[i] - holes.pz[h];
      const double rho2 = dx * dx + dy * dy + dz * dz;
      const double inv = 1.0 / std::sqrt(rho2);
      chi += holes.alpha[h] * inv;
      psi += holes.beta[h] * inv;
      if (want_grad) {
        const double inv3 = inv / rho2;
        const double ca = holes.alpha[h] * inv3;
        const double cb = holes.beta[h] * inv3;
        gcx -= ca * dx;
        gcy -= ca * dy;
        gcz -= ca * dz;
        gpx -= cb * dx;
        gpy -= cb * dy;
        gpz -= cb * dz;
      }
    }
    out.chi[i] = chi;
    out.psi[i] = psi;
    if (want_grad) {
      out.dchi_x[i] = gcx;
      out.dchi_y[i] = gcy;
      out.dchi_z[i] = gcz;
      out.dpsi_x[i] = gpx;
      out.dpsi_y[i] = gpy;
      out.dpsi_z[i] = gpz;
    }
  }
}

}  // namespace geostat::kern
