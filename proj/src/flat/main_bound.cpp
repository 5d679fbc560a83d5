#include "geostat/flat/main_bound.hpp"

#include <cmath>

namespace geostat {

FlatDistanceEstimate main_bound(const HoleSet& holes, double R, double eps,
                                const Constants& constants, const PipelineOptions& options,
                                const VolumeBudget& budget) {
  FlatDistanceEstimate est;
  est.params = build_pipeline(holes, R, eps, constants, options);
  est.D = 2.0 * R;

  est.volumes = volume_report(holes, R, eps, est.params.lambda_used, est.params.gamma_i_eps,
                              est.params.delta_iR, est.params.manifest, budget);

  LsInputs in;
  in.eps = eps;
  in.lambda = est.params.lambda_used;
  in.D = est.D;
  in.vol_W_1 = est.volumes.vol_g_W;
  in.vol_W_2 = est.volumes.vol_d_W;
  in.area_bdry_1 = est.volumes.vol_g_bdry;
  in.area_bdry_2 = est.volumes.vol_d_bdry;
  in.excess_1 = est.volumes.vol_g_M1mW;
  in.excess_2 = est.volumes.vol_d_M2mW;
  const LsBound b = ls_bound(in);
  est.a = b.a;
  est.hbar = b.hbar;
  est.dF_bound = b.dF;
  est.dDF_bound = b.dDF;

  const double sq = std::sqrt(eps);
  const auto& mf = est.params.manifest;
  est.envelope_dF = mf.CF_prime * std::pow(R, 4) * sq + mf.CF_dprime * std::pow(R, 3) * sq;
  est.envelope_dDF = mf.C_DF * std::pow(R, 3) * sq;
  est.numeric_le_envelope = est.dF_bound <= est.envelope_dF && est.dDF_bound <= est.envelope_dDF;
  return est;
}

}  // namespace geostat
