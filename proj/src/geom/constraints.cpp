#include "geostat/geom/constraints.hpp"

#include <algorithm>
#include <cmath>

#include "geostat/core/masses.hpp"
#include "geostat/util/rng.hpp"

namespace geostat {

namespace {

Vec3 flux(const HoleSet& holes, const Vec3& x) {
  const ConformalJet jet = conformal_eval(holes, x, 1);
  const Vec3 grad_u = jet.grad_psi / jet.psi - jet.grad_chi / jet.chi;
  return jet.Psi * grad_u;
}

}  // namespace

ConstraintReport verify_constraints(const HoleSet& holes, int sample_count, std::uint64_t seed,
                                    double tolerance) {
  ConstraintReport report;
  report.tolerance = tolerance;
  Rng rng(seed);

  Vec3 centroid;
  double spread = 0.0;
  for (const Hole& h : holes.holes) centroid += h.p;
  centroid = centroid / std::max(1, holes.size());
  for (const Hole& h : holes.holes) spread = std::max(spread, norm(h.p - centroid));
  const double mass = adm_mass(holes);
  const double radius = 2.0 * spread + 4.0 * std::max(1.0, mass);

  report.rows.reserve(sample_count);
  while (static_cast<int>(report.rows.size()) < sample_count) {
    const Vec3 x = rng.in_ball(centroid, radius);
    const auto near = nearest_hole(holes, x);
    const Hole& nh = holes[near.index];
    const double guard =
        std::max(hole_coincidence_tolerance(nh.p), 1e-9 * nh.mass_parameter());
    if (near.distance < guard) {
      ++report.excluded_samples;
      continue;
    }

    const CurvaturePoint cp = curvature_point(holes, x);
    ConstraintRow row;
    row.point = x;
    row.R = cp.sample.scalar_curvature;
    row.two_e2 = 2.0 * cp.sample.e_norm_sq;

    // Denominator: natural magnitude of the cancelling terms, so zero-charge
    // data reports roundoff-level residuals rather than 0/0 artifacts.
    const LogJet lj = log_jet(cp.jet);
    const double term_scale =
        (4.0 * std::abs(lj.lap_f) + 2.0 * lj.grad_f2) / (lj.Psi * lj.Psi);
    const double denom = std::max({std::abs(row.R), std::abs(row.two_e2), term_scale, 1e-30});
    row.rel_residual = std::abs(row.R - row.two_e2) / denom;

    // FD divergence of the analytic flux; quality measured against the
    // magnitude of the differences being cancelled.
    const double h = 1e-5 * near.distance;
    double div_sum = 0.0, mag_sum = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 e;
      e[axis] = h;
      const double d = (flux(holes, x + e)[axis] - flux(holes, x - e)[axis]) / (2.0 * h);
      div_sum += d;
      mag_sum += std::abs(d);
    }
    row.div_residual = std::abs(div_sum) / std::max(mag_sum, 1e-30);

    report.max_rel_residual = std::max(report.max_rel_residual, row.rel_residual);
    report.max_div_residual = std::max(report.max_div_residual, row.div_residual);
    report.max_abs_R_zero_charge = std::max(report.max_abs_R_zero_charge, std::abs(row.R));
    report.rows.push_back(row);
  }

  report.pass = report.max_rel_residual < tolerance && report.max_div_residual < tolerance;
  return report;
}

}  // namespace geostat
