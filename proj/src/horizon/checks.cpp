#include "geostat/horizon/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geostat/core/conformal.hpp"
#include "geostat/core/masses.hpp"
#include "geostat/geom/area.hpp"

namespace geostat {

double area_lower_bound(const HoleSet& holes, const RadialSurface& surface) {
  const SphereGrid& g = *surface.grid;
  double worst = 0.0;
  for (int j = 0; j < g.ntheta(); ++j)
    for (int k = 0; k < g.nphi(); ++k) {
      const ConformalJet jet = conformal_eval(holes, surface.point(j, k), 1);
      const double ratio = norm2(jet.grad_Psi) / std::pow(jet.Psi, 4);
      worst = std::max(worst, ratio);
    }
  return 4.0 * M_PI / worst;
}

PenroseReport penrose_check(const HoleSet& holes, const std::vector<HorizonResult>& horizons) {
  PenroseReport report;
  report.mass = adm_mass(holes);
  for (const auto& h : horizons) report.total_area += h.area_g;
  report.rhs = std::sqrt(report.total_area / (16.0 * M_PI));
  report.slack = report.mass - report.rhs;
  report.pass = report.mass >= report.rhs;

  report.pass_mass_below = true;
  const double lhs = 16.0 * M_PI * report.mass * report.mass;
  for (const auto& h : horizons) {
    PenroseReport::MassBelow mb;
    mb.lhs = lhs;
    mb.rhs = area_lower_bound(holes, h.surface);
    mb.pass = mb.lhs >= mb.rhs;
    report.pass_mass_below = report.pass_mass_below && mb.pass;
    report.mass_below.push_back(mb);
  }
  return report;
}

LocateReport locate_checks(const HoleSet& holes, const std::vector<HorizonResult>& horizons,
                           const Constants& constants) {
  LocateReport report;
  report.mass = adm_mass(holes);
  report.C1 = constants.C1;
  const auto sep = try_separation(holes);
  report.sigma_defined = sep.has_value();
  if (sep) {
    report.sigma = sep->sigma;
    report.gate_applicable = report.mass < report.sigma / (20.0 * constants.C1);
  } else {
    report.gate_applicable = false;
  }

  const int n = holes.size();
  report.gamma_j.assign(n, 0.0);
  bool all = true;

  for (const auto& h : horizons) {
    std::vector<LocateCheck> checks;
    // Distances of surface points to each hole.
    std::vector<double> dmin(n, std::numeric_limits<double>::infinity()), dmax(n, 0.0);
    const SphereGrid& g = *h.surface.grid;
    for (int j = 0; j < g.ntheta(); ++j)
      for (int k = 0; k < g.nphi(); ++k) {
        const Vec3 x = h.surface.point(j, k);
        for (int i = 0; i < n; ++i) {
          const double d = norm(x - holes[i].p);
          dmin[i] = std::min(dmin[i], d);
          dmax[i] = std::max(dmax[i], d);
        }
      }

    const double sqrt_area_over_pi = std::sqrt(h.area_g / M_PI);
    const int jc = h.annulus_hole >= 0
                       ? h.annulus_hole
                       : (h.center_hole >= 0
                              ? h.center_hole
                              : (h.enclosed_holes.empty() ? -1 : h.enclosed_holes.front()));

    if (jc >= 0) {
      LocateCheck a;
      a.name = "meets-ball-sqrt(A/4pi)";
      a.lhs = dmin[jc];
      a.rhs = 0.5 * sqrt_area_over_pi;  // sqrt(A / 4 pi)
      a.pass = a.lhs <= a.rhs;
      checks.push_back(a);

      LocateCheck b;
      b.name = "contained-in-2C1-sqrt(A/pi)";
      b.lhs = dmax[jc];
      b.rhs = 2.0 * constants.C1 * sqrt_area_over_pi;
      b.pass = b.lhs <= b.rhs;
      checks.push_back(b);

      LocateCheck c;
      c.name = "avoids-inner-ball";
      c.lhs = dmin[jc];
      c.rhs = holes[jc].alpha * holes[jc].beta /
              (4.0 * constants.C1 * holes[jc].mass_parameter());
      c.pass = c.lhs >= c.rhs;
      checks.push_back(c);

      LocateCheck e;
      e.name = "radius-chain-8C1m-below-sigma/2";
      e.lhs = 2.0 * constants.C1 * sqrt_area_over_pi;
      e.rhs = 8.0 * constants.C1 * report.mass;
      e.pass = e.lhs <= e.rhs &&
               (!sep || 8.0 * constants.C1 * report.mass < 0.5 * report.sigma);
      checks.push_back(e);

      // gamma_j accumulation: this surface is "near" hole j when contained in
      // the (b) ball about it.
      for (int i = 0; i < n; ++i) {
        if (dmax[i] <= 2.0 * constants.C1 * sqrt_area_over_pi)
          report.gamma_j[i] =
              std::max(report.gamma_j[i], 2.0 * constants.C1 * sqrt_area_over_pi);
      }
    }
    for (const auto& c : checks)
      if (c.applicable && !c.pass) all = false;
    report.per_horizon.push_back(std::move(checks));
  }

  report.gamma_bound_pass = true;
  for (double gj : report.gamma_j)
    if (gj > 8.0 * constants.C1 * report.mass) report.gamma_bound_pass = false;
  if (!report.gamma_bound_pass) all = false;

  // Pairwise disjointness of hole-centered horizons (radial graphs about
  // their centers): max radii must not cover the separation.
  report.disjoint_pass = true;
  for (std::size_t a = 0; a < horizons.size(); ++a)
    for (std::size_t b = a + 1; b < horizons.size(); ++b) {
      const auto& ha = horizons[a];
      const auto& hb = horizons[b];
      const double gap = norm(ha.surface.center - hb.surface.center);
      if (gap <= 0.0) continue;
      if (ha.surface.max_radius() + hb.surface.max_radius() >= gap)
        report.disjoint_pass = false;
    }
  if (!report.disjoint_pass) all = false;

  report.all_pass = all;
  return report;
}

StripFloorReport strip_floor_check(const HoleSet& holes, const RadialSurface& surface,
                                   const Vec3& p, double r, const Constants& constants) {
  StripFloorReport report;
  const double r1 = constants.C1 * r;
  const double r2 = 2.0 * constants.C1 * r;
  const SphereGrid& g = *surface.grid;

  bool inside_shell = false, beyond_outer = false, within_inner = false;
  double area = 0.0;
  const SurfaceGeometry geo = surface_geometry(surface);
  for (int j = 0; j < g.ntheta(); ++j)
    for (int k = 0; k < g.nphi(); ++k) {
      const int i = g.idx(j, k);
      const Vec3 x = {geo.x[i], geo.y[i], geo.z[i]};
      const double d = norm(x - p);
      if (d < r1) within_inner = true;
      if (d > r2) beyond_outer = true;
      if (d >= r1 && d <= r2) {
        inside_shell = true;
        const ConformalJet jet = conformal_eval(holes, x, 0);
        area += jet.Psi * jet.Psi * geo.dA[i];
      }
    }

  report.applicable = inside_shell && beyond_outer && within_inner;
  report.clipped_area = area;
  // Unit-annulus floor pi e^{-2} s0^2 rescaled by the pullback scale C1 r.
  report.floor = M_PI * std::exp(-2.0) * constants.s0 * constants.s0 * r1 * r1;
  report.pass = !report.applicable || report.clipped_area >= report.floor;
  return report;
}

}  // namespace geostat
