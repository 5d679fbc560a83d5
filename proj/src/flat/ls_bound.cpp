#include "geostat/flat/ls_bound.hpp"

#include <algorithm>
#include <cmath>

#include "geostat/error.hpp"

namespace geostat {

LsBound ls_bound(const LsInputs& in) {
  const double vals[] = {in.eps,        in.lambda,      in.D,        in.vol_W_1, in.vol_W_2,
                         in.area_bdry_1, in.area_bdry_2, in.excess_1, in.excess_2};
  for (double v : vals)
    if (v < 0.0 || !std::isfinite(v))
      throw Error(ErrorCode::NonPositiveInput, "ls_bound inputs must be finite and nonnegative");
  if (in.lambda > 2.0 * in.D)
    throw Error(ErrorCode::LambdaExceedsDiameter, "lambda exceeds twice the diameter bound");

  LsBound out;
  // Strict inequality a > arccos((1+eps)^-1) D / pi.
  out.a = std::acos(1.0 / (1.0 + in.eps)) * in.D / M_PI * (1.0 + 1e-12);
  out.hbar = std::max(std::sqrt(2.0 * in.lambda * in.D),
                      in.D * std::sqrt(in.eps * in.eps + 2.0 * in.eps));
  const double front = 2.0 * out.hbar + out.a;
  out.dF = front * (in.vol_W_1 + in.vol_W_2 + in.area_bdry_1 + in.area_bdry_2) + in.excess_1 +
           in.excess_2;
  if (in.D > 0.0) {
    out.dDF = front * ((in.vol_W_1 + in.vol_W_2) / in.D + in.area_bdry_1 + in.area_bdry_2) +
              in.excess_1 + in.excess_2;
  }
  return out;
}

}  // namespace geostat
