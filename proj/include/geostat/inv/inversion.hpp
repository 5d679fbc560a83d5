#pragma once

#include <cstdint>

#include "geostat/core/hole_set.hpp"

namespace geostat {

// The inversion F(y) = alpha_n beta_n y/|y|^2 + x_n sending the pivot end to
// infinity.  The target data (Y) lists the pivot image first (at the origin),
// then the remaining holes in source order.
struct InversionMap {
  HoleSet source;
  int pivot = -1;
  HoleSet target;
  double scale = 0.0;  // alpha_n beta_n
  Vec3 pivot_position;

  Vec3 forward(const Vec3& y) const {  // F: Y -> X
    return (scale / norm2(y)) * y + pivot_position;
  }
  Vec3 inverse(const Vec3& x) const {  // F^{-1}: X -> Y
    const Vec3 d = x - pivot_position;
    return (scale / norm2(d)) * d;
  }
};

// Throws ZeroScale when alpha_n beta_n = 0 and IndexOutOfRange for a bad pivot.
InversionMap invert(const HoleSet& holes, int pivot);

struct IsometryReport {
  double max_rel_deviation = 0.0;
  int samples = 0;
  int resampled = 0;  // draws that landed on a hole and were redrawn
};

// Compares (Psi_X(F(y)))^2 (alpha_n beta_n)^2 / |y|^4 against (Psi_Y(y))^2 at
// random points of the target domain (log-uniform shells around each hole
// plus a uniform bounding ball).
IsometryReport verify_isometry(const InversionMap& map, int sample_count,
                               std::uint64_t seed = 99);

struct MassCorrespondenceReport {
  double m_adm_Y = 0.0, m_pivot_X = 0.0;     // m_ADM(Y) = m_{X,n}
  double m_Y0 = 0.0, m_adm_X = 0.0;          // m_{Y,0} = m_ADM(X)
  std::vector<std::pair<double, double>> per_end;  // (m_{Y,k}, m_{X,k}), non-pivot
  double max_rel_deviation = 0.0;
  bool pass = false;
  double tolerance = 1e-12;
};

MassCorrespondenceReport mass_correspondence(const InversionMap& map);

}  // namespace geostat
