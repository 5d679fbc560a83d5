#include "geostat/horizon/residual.hpp"

#include "geostat/kern/batch.hpp"

namespace geostat {

std::vector<double> mc_residual(const HoleSet& holes, const SurfaceGeometry& geo) {
  const std::size_t n = geo.x.size();
  std::vector<double> chi(n), psi(n), gcx(n), gcy(n), gcz(n), gpx(n), gpy(n), gpz(n);
  kern::JetOut out;
  out.chi = chi.data();
  out.psi = psi.data();
  out.dchi_x = gcx.data();
  out.dchi_y = gcy.data();
  out.dchi_z = gcz.data();
  out.dpsi_x = gpx.data();
  out.dpsi_y = gpy.data();
  out.dpsi_z = gpz.data();
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  kern::eval_batch(soa, geo.x.data(), geo.y.data(), geo.z.data(), n, out);

  std::vector<double> resid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gpsi_x = psi[i] * gcx[i] + chi[i] * gpx[i];
    const double gpsi_y = psi[i] * gcy[i] + chi[i] * gpy[i];
    const double gpsi_z = psi[i] * gcz[i] + chi[i] * gpz[i];
    const double gdotn = gpsi_x * geo.nx[i] + gpsi_y * geo.ny[i] + gpsi_z * geo.nz[i];
    resid[i] = geo.H[i] + 2.0 * gdotn / (chi[i] * psi[i]);
  }
  return resid;
}

std::vector<double> mc_residual(const HoleSet& holes, const RadialSurface& surface) {
  return mc_residual(holes, surface_geometry(surface));
}

}  // namespace geostat
