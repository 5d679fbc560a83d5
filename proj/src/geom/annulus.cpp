#include "geostat/geom/annulus.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "geostat/core/masses.hpp"
#include "geostat/error.hpp"
#include "geostat/geom/metric.hpp"
#include "geostat/geom/sphere_grid.hpp"
#include "geostat/util/rng.hpp"

namespace geostat {

AnnulusMetric annulus_pullback(const HoleSet& holes, int hole, double c,
                               const AnnulusOptions& options) {
  if (hole < 0 || hole >= holes.size())
    throw Error(ErrorCode::IndexOutOfRange, "annulus hole index");
  if (!(c > 0.0)) throw Error(ErrorCode::NonPositiveInput, "annulus scale c must be positive");

  if (holes.size() >= 2) {
    double sigma_i = std::numeric_limits<double>::infinity();
    double sigma_i_out = 0.0;
    for (int j = 0; j < holes.size(); ++j) {
      if (j == hole) continue;
      const double r = norm(holes[hole].p - holes[j].p);
      sigma_i = std::min(sigma_i, r);
      sigma_i_out = std::max(sigma_i_out, r);
    }
    if (!(sigma_i > 5.0 * c || sigma_i_out < c / 5.0)) {
      std::ostringstream msg;
      msg << "need sigma_i > 5c or sigma_i_out < c/5; sigma_i = " << sigma_i
          << ", sigma_i_out = " << sigma_i_out << ", c = " << c;
      throw Error(ErrorCode::ScaleViolatesSeparation, msg.str());
    }
  }

  AnnulusMetric out;
  out.hole = hole;
  out.c = c;
  out.factor_min = std::numeric_limits<double>::infinity();
  out.factor_max = 0.0;
  out.k1_inner = std::numeric_limits<double>::infinity();
  out.k2_inner = 0.0;

  const auto grid = SphereGrid::get(std::max(8, options.ntheta), std::max(8, options.nphi), 8);
  Rng rng(options.seed);
  const Vec3 pi = holes[hole].p;

  for (int ir = 0; ir < options.radial; ++ir) {
    // Log-spaced radii covering [1/4, 4].
    const double t = (ir + 0.5) / options.radial;
    const double rho = 0.25 * std::pow(16.0, t);
    const bool inner = rho >= 0.5 && rho <= 2.0;
    for (int j = 0; j < grid->ntheta(); ++j)
      for (int k = 0; k < grid->nphi(); ++k) {
        const Vec3 u = rho * grid->dir(j, k);
        const Vec3 x = pi + c * u;
        const CurvaturePoint cp = curvature_point(holes, x);
        const double factor = cp.jet.Psi;
        const double f2 = factor * factor;
        out.factor_min = std::min(out.factor_min, factor);
        out.factor_max = std::max(out.factor_max, factor);
        if (inner) {
          out.k1_inner = std::min(out.k1_inner, f2);
          out.k2_inner = std::max(out.k2_inner, f2);
        }
        // Sectional curvature scales by c^2 under the pullback.
        double kmax = std::max(std::abs(cp.sample.sectional_min), std::abs(cp.sample.sectional_max));
        for (int rp = 0; rp < options.random_planes; ++rp) {
          const double ks = sectional_curvature(cp.sample, cp.jet.Psi, rng.unit_vector());
          kmax = std::max(kmax, std::abs(ks));
        }
        out.kappa_est = std::max(out.kappa_est, c * c * kmax);
        ++out.samples;
      }
  }
  out.k1 = out.factor_min * out.factor_min;
  out.k2 = out.factor_max * out.factor_max;
  out.factor_at_least_one = out.factor_min >= 1.0;
  return out;
}

}  // namespace geostat
