#pragma once

#include <array>

#include "geostat/core/conformal.hpp"
#include "geostat/core/hole_set.hpp"

namespace geostat {

struct MetricSample {
  Vec3 point;
  double factor = 0.0;  // Psi^2
  Mat3 tensor;          // factor * identity
};

MetricSample metric_at(const HoleSet& holes, const Vec3& x);

struct CurvatureSample {
  Vec3 point;
  // Christoffel symbols of g = e^{2f} delta, Gamma[k][i][j], symmetric in (i,j).
  std::array<std::array<std::array<double, 3>, 3>, 3> christoffels{};
  Mat3 ricci;                    // lower indices
  double scalar_curvature = 0.0;
  double sectional_min = 0.0;    // over the three coordinate planes
  double sectional_max = 0.0;
  double e_norm_sq = 0.0;        // |E|^2_g
};

CurvatureSample curvature_at(const HoleSet& holes, const Vec3& x);

// Sectional curvature of the plane with flat normal direction nu (need not
// be unit).  In three dimensions K(plane) = R/2 - Ric(nu^, nu^) with nu^ the
// g-unit normal.
double sectional_curvature(const CurvatureSample& sample, double Psi, const Vec3& nu);

// Convenience: curvature plus the jet it came from.
struct CurvaturePoint {
  ConformalJet jet;
  CurvatureSample sample;
};
CurvaturePoint curvature_point(const HoleSet& holes, const Vec3& x);

}  // namespace geostat
