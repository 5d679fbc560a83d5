#include "geostat/inv/inversion.hpp"

#include <algorithm>
#include <cmath>

#include "geostat/core/conformal.hpp"
#include "geostat/core/masses.hpp"
#include "geostat/error.hpp"
#include "geostat/util/rng.hpp"

namespace geostat {

InversionMap invert(const HoleSet& holes, int pivot) {
  if (pivot < 0 || pivot >= holes.size())
    throw Error(ErrorCode::IndexOutOfRange, "pivot index");
  const Hole& hn = holes[pivot];
  const double scale = hn.alpha * hn.beta;
  if (!(scale > 0.0))
    throw Error(ErrorCode::ZeroScale, "pivot needs alpha_n beta_n > 0 (strict data)");

  InversionMap map;
  map.source = holes;
  map.pivot = pivot;
  map.scale = scale;
  map.pivot_position = hn.p;
  map.target.strict_beta = holes.strict_beta;

  // Pivot image first, at the origin, keeping its own weights.
  map.target.holes.push_back({Vec3{}, hn.alpha, hn.beta});
  for (int j = 0; j < holes.size(); ++j) {
    if (j == pivot) continue;
    const Hole& hj = holes[j];
    const Vec3 d = hj.p - hn.p;
    const double r = norm(d);
    Hole out;
    out.p = (scale / (r * r)) * d;
    out.alpha = hj.beta * hn.alpha / r;
    out.beta = hj.alpha * hn.beta / r;
    map.target.holes.push_back(out);
  }
  return map;
}

IsometryReport verify_isometry(const InversionMap& map, int sample_count, std::uint64_t seed) {
  IsometryReport report;
  Rng rng(seed);
  const HoleSet& Y = map.target;

  // Bounding ball of the target holes.
  double extent = 0.0;
  for (const Hole& h : Y.holes) extent = std::max(extent, norm(h.p) + h.mass_parameter());
  extent = 4.0 * std::max(extent, map.scale / std::max(extent, 1e-300));

  // Distances from F(y) to the source holes, through the inversion identity
  //   |F(y) - x_n| = s/|y|,  |F(y) - x_j| = s |y - y_j| / (|y| |y_j|),
  // which stays fully conditioned where forming F(y) in absolute coordinates
  // would quantize away the offset from a far-off pivot.
  auto psi_source_at_image = [&map, &Y](const Vec3& y) {
    const double ynorm = norm(y);
    double chi = 1.0, psi = 1.0;
    const Hole& piv = map.source[map.pivot];
    const double rho_n = map.scale / ynorm;
    chi += piv.alpha / rho_n;
    psi += piv.beta / rho_n;
    int t = 1;
    for (int j = 0; j < map.source.size(); ++j) {
      if (j == map.pivot) continue;
      const Vec3& yj = Y[t].p;
      const double rho_j = map.scale * norm(y - yj) / (ynorm * norm(yj));
      chi += map.source[j].alpha / rho_j;
      psi += map.source[j].beta / rho_j;
      ++t;
    }
    return chi * psi;
  };

  const int n_holes = Y.size();
  while (report.samples < sample_count) {
    Vec3 y;
    const int mode = report.samples % (n_holes + 1);
    if (mode == n_holes) {
      y = rng.in_ball({}, extent);
    } else {
      // Log-uniform radius around hole `mode`: near-field through far-field.
      const Hole& h = Y[mode];
      const double r_lo = 1e-6 * std::max(h.mass_parameter(), 1e-30);
      const double r_hi = extent;
      const double r = r_lo * std::pow(r_hi / r_lo, rng.uniform01());
      y = h.p + r * rng.unit_vector();
    }
    const auto near_y = nearest_hole(Y, y);
    const double guard_y = std::max(2.0 * hole_coincidence_tolerance(Y[near_y.index].p),
                                    1e-10 * Y[near_y.index].mass_parameter());
    if (near_y.distance < guard_y || norm(y) < 1e-30) {
      ++report.resampled;
      continue;
    }
    const double psi_x = psi_source_at_image(y);
    const double psi_y = conformal_eval(Y, y, 0).Psi;
    const double y2 = norm2(y);
    const double pulled = psi_x * psi_x * map.scale * map.scale / (y2 * y2);
    const double local = psi_y * psi_y;
    report.max_rel_deviation =
        std::max(report.max_rel_deviation, std::abs(pulled - local) / local);
    ++report.samples;
  }
  return report;
}

MassCorrespondenceReport mass_correspondence(const InversionMap& map) {
  MassCorrespondenceReport report;
  report.m_adm_Y = adm_mass(map.target);
  report.m_pivot_X = end_mass(map.source, map.pivot);
  report.m_Y0 = end_mass(map.target, 0);
  report.m_adm_X = adm_mass(map.source);

  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
  };
  report.max_rel_deviation = std::max(rel(report.m_adm_Y, report.m_pivot_X),
                                      rel(report.m_Y0, report.m_adm_X));

  int ty = 1;
  for (int k = 0; k < map.source.size(); ++k) {
    if (k == map.pivot) continue;
    const double my = end_mass(map.target, ty++);
    const double mx = end_mass(map.source, k);
    report.per_end.emplace_back(my, mx);
    report.max_rel_deviation = std::max(report.max_rel_deviation, rel(my, mx));
  }
  report.pass = report.max_rel_deviation < report.tolerance;
  return report;
}

}  // namespace geostat
