#include "geostat/horizon/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geostat/core/masses.hpp"
#include "geostat/error.hpp"
#include "geostat/geom/annulus.hpp"

namespace geostat {

Constants constants(double kappa, double i0) {
  if (!(kappa > 0.0) || !(i0 > 0.0))
    throw Error(ErrorCode::NonPositiveInput, "constants need kappa > 0 and i0 > 0");
  Constants c;
  c.kappa = kappa;
  c.i0 = i0;
  c.s0 = 0.5 * std::min({i0, 1.0 / std::sqrt(kappa), 1.0 / 3.0});
  c.C1 = 1.0 + 2.0 * M_E / c.s0;
  c.eps0 = std::sqrt(2.0 / (M_PI * c.C1 * c.C1));
  c.source = "explicit";
  return c;
}

Constants auto_constants(const HoleSet& holes) {
  double kappa = 0.0;
  for (int i = 0; i < holes.size(); ++i) {
    double c_scale;
    if (holes.size() >= 2) {
      double sigma_i = norm(holes[i].p - holes[(i + 1) % holes.size()].p);
      for (int j = 0; j < holes.size(); ++j)
        if (j != i) sigma_i = std::min(sigma_i, norm(holes[i].p - holes[j].p));
      c_scale = sigma_i / 10.0;
    } else {
      c_scale = holes[i].mass_parameter();
    }
    AnnulusOptions opts;
    opts.radial = 16;
    opts.ntheta = 8;
    opts.nphi = 16;
    const AnnulusMetric am = annulus_pullback(holes, i, c_scale, opts);
    kappa = std::max(kappa, am.kappa_est);
  }
  // Guard against the flat limit where the sampled maximum is ~0.
  kappa = std::max(kappa, 1e-12);
  const double i0 = std::min(1.0 / std::sqrt(kappa), 1.0 / 3.0);
  Constants c = constants(kappa, i0);
  std::ostringstream src;
  src << "auto: kappa_est = " << kappa << " from annulus sampling, i0 = min{1/sqrt(kappa), 1/3}";
  c.source = src.str();
  return c;
}

}  // namespace geostat
