#include "geostat/geom/area.hpp"

#include <cmath>

#include "geostat/kern/batch.hpp"

namespace geostat {

namespace {

// Quadrature of Psi^2 against the flat area element of the graph.
double area_once(const kern::HoleSoA& soa, const RadialSurface& surface, double* flat_out) {
  const SurfaceGeometry geo = surface_geometry(surface);
  const std::size_t n = geo.dA.size();
  std::vector<double> chi(n), psi(n);
  kern::JetOut out;
  out.chi = chi.data();
  out.psi = psi.data();
  kern::eval_batch(soa, geo.x.data(), geo.y.data(), geo.z.data(), n, out);
  double area = 0.0, flat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = chi[i] * psi[i];
    area += f * f * geo.dA[i];
    flat += geo.dA[i];
  }
  if (flat_out) *flat_out = flat;
  return area;
}

}  // namespace

AreaResult surface_area(const HoleSet& holes, const RadialSurface& surface) {
  check_surface_avoids_holes(surface, holes);
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);

  AreaResult result;
  result.area = area_once(soa, surface, &result.area_flat);

  // Refinement estimate: band-limit the graph, resample on a finer grid and
  // requadrature.  For band-limited graphs (every solver output is one) the
  // difference is pure quadrature error.
  const SphereGrid& g = *surface.grid;
  const int lref = std::min(g.lmax(), g.ntheta() - 2);
  const auto coeffs = g.analyze(surface.r, lref);

  int nt2 = (3 * g.ntheta()) / 2;
  int np2 = (3 * g.nphi()) / 2;
  if (np2 % 2) ++np2;
  RadialSurface fine;
  fine.center = surface.center;
  fine.grid = SphereGrid::get(nt2, np2, lref);
  SphereGrid::Spectral c2 = coeffs;
  fine.grid->synthesize(c2, fine.r);
  const double area_fine = area_once(soa, fine, nullptr);

  result.error = std::max(std::abs(area_fine - result.area), 8e-15 * std::abs(result.area));
  return result;
}

}  // namespace geostat
