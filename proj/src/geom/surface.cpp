#include "geostat/geom/surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geostat/error.hpp"

namespace geostat {

RadialSurface RadialSurface::sphere(const Vec3& center, double radius, int ntheta, int nphi) {
  RadialSurface s;
  s.center = center;
  s.grid = SphereGrid::get(ntheta, nphi, std::min(ntheta - 1, 48));
  s.r.assign(s.grid->size(), radius);
  return s;
}

double RadialSurface::min_radius() const { return *std::min_element(r.begin(), r.end()); }
double RadialSurface::max_radius() const { return *std::max_element(r.begin(), r.end()); }

double RadialSurface::mean_radius() const { return grid->integrate(r) / (4.0 * M_PI); }

bool RadialSurface::encloses(const Vec3& x) const {
  const Vec3 d = x - center;
  const double rho = norm(d);
  if (rho == 0.0) return true;
  const double theta = std::acos(std::clamp(d.z / rho, -1.0, 1.0));
  const double phi = std::atan2(d.y, d.x);
  return rho < radius_at(theta, phi);
}

SurfaceGeometry surface_geometry(const RadialSurface& surface) {
  const SphereGrid& g = *surface.grid;
  const int n = g.size();
  const auto d = g.derivatives(surface.r);

  SurfaceGeometry out;
  out.x.resize(n);
  out.y.resize(n);
  out.z.resize(n);
  out.nx.resize(n);
  out.ny.resize(n);
  out.nz.resize(n);
  out.dA.resize(n);
  out.H.resize(n);

  for (int j = 0; j < g.ntheta(); ++j) {
    const double st = g.sin_theta(j);
    const double ct = g.cos_theta(j);
    const double wq = g.weight_u(j) * g.dphi();
    for (int k = 0; k < g.nphi(); ++k) {
      const int i = g.idx(j, k);
      const double r = surface.r[i];
      if (!(r > 0.0)) throw Error(ErrorCode::DegenerateGrid, "non-positive radius on the grid");
      const double rth = d.dth[i];
      const double rph = d.dph[i];
      const double rps = rph / st;  // r_phi / sin(theta), bounded for smooth closed graphs

      // A positive radial graph cannot literally self-intersect, but once the
      // slope dwarfs the radius the discretization no longer resolves it.
      if (rth * rth + rps * rps > 64.0 * r * r) {
        std::ostringstream msg;
        msg << "graph slope exceeds grid resolution at (" << j << "," << k << ")";
        throw Error(ErrorCode::DegenerateGrid, msg.str());
      }
      const double W2 = r * r + rth * rth + rps * rps;
      const double W = std::sqrt(W2);

      // Orthonormal spherical frame components.
      const Vec3 er = g.dir(j, k);
      const Vec3 eth = g.e_theta(j, k);
      const Vec3 eph = g.e_phi(k);

      const Vec3 pt = surface.center + r * er;
      out.x[i] = pt.x;
      out.y[i] = pt.y;
      out.z[i] = pt.z;

      const Vec3 nrm = (r * er - rth * eth - rps * eph) / W;
      out.nx[i] = nrm.x;
      out.ny[i] = nrm.y;
      out.nz[i] = nrm.z;

      out.dA[i] = r * W * wq;

      // Second fundamental form in the frame.
      const double E = r * r + rth * rth;
      const double F = rth * rph;
      const double G = rph * rph + r * r * st * st;
      const double det = E * G - F * F;
      if (!(det > 0.0) || !std::isfinite(det)) {
        std::ostringstream msg;
        msg << "first fundamental form degenerate at (" << j << "," << k << ")";
        throw Error(ErrorCode::DegenerateGrid, msg.str());
      }
      // X_thth, X_thph, X_phph in (e_r, e_th, e_ph) components.
      const double a_r = d.dth2[i] - r, a_t = 2.0 * rth, a_p = 0.0;
      const double b_r = d.dthph[i], b_t = rph, b_p = rth * st + r * ct;
      const double c_r = d.dph2[i] - r * st * st, c_t = -r * st * ct, c_p = 2.0 * rph * st;

      const double n_r = r / W, n_t = -rth / W, n_p = -rps / W;
      const double L = a_r * n_r + a_t * n_t + a_p * n_p;
      const double M = b_r * n_r + b_t * n_t + b_p * n_p;
      const double N2 = c_r * n_r + c_t * n_t + c_p * n_p;

      // Sign such that a round sphere has H = +2/r with the outward normal.
      out.H[i] = -(G * L - 2.0 * F * M + E * N2) / det;
    }
  }
  return out;
}

void check_surface_avoids_holes(const RadialSurface& surface, const HoleSet& holes) {
  for (int i = 0; i < holes.size(); ++i) {
    const Vec3 d = holes[i].p - surface.center;
    const double rho = norm(d);
    double rdir;
    if (rho < 1e-300) {
      rdir = surface.min_radius();
    } else {
      const double theta = std::acos(std::clamp(d.z / rho, -1.0, 1.0));
      rdir = surface.radius_at(theta, std::atan2(d.y, d.x));
    }
    const double tol = std::max(hole_coincidence_tolerance(holes[i].p), 1e-9 * rdir);
    if (std::abs(rho - rdir) < tol) {
      std::ostringstream msg;
      msg << "surface passes through hole " << i;
      throw Error(ErrorCode::SurfaceThroughHole, msg.str());
    }
  }
}

}  // namespace geostat
