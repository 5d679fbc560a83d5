#pragma once

namespace geostat {

// Inputs of the subregion distance estimate between two manifolds sharing a
// region W: metric pinch eps, distance defect lambda, extrinsic diameter cap
// D, the W volumes and boundary areas of both sides, and the excess volumes.
struct LsInputs {
  double eps = 0.0;
  double lambda = 0.0;
  double D = 0.0;
  double vol_W_1 = 0.0, vol_W_2 = 0.0;
  double area_bdry_1 = 0.0, area_bdry_2 = 0.0;
  double excess_1 = 0.0, excess_2 = 0.0;
};

struct LsBound {
  double a = 0.0;     // hemispherical width, kept strictly above the infimum
  double hbar = 0.0;  // max{sqrt(2 lambda D), D sqrt(eps^2 + 2 eps)}
  double dF = 0.0;
  double dDF = 0.0;
};

// Throws LambdaExceedsDiameter when lambda > 2D and NonPositiveInput on
// negative inputs.
LsBound ls_bound(const LsInputs& in);

}  // namespace geostat
