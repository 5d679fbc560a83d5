#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"
#include "geostat/flat/constants_manifest.hpp"
#include "geostat/geom/volume.hpp"
#include "geostat/horizon/finder.hpp"

namespace geostat {

struct Gate {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Hypothesis gates of the flat-distance estimate: eps < eps0, m < R eps^3,
// m < eps sigma / 32, and no |p_i| in (R - 32 R eps, R + 32 R eps).
std::vector<Gate> evaluate_gates(const HoleSet& holes, double R, double eps,
                                 const Constants& constants);
bool gates_pass(const std::vector<Gate>& gates);
// Throws HypothesisViolated naming the first failed gate.
void require_gates(const std::vector<Gate>& gates);

// delta_{i,R} = max{(a_i+b_i) e^{-R/(a_i+b_i)}, a_i b_i / (4 C1 (a_i+b_i))}.
double delta_iR(const HoleSet& holes, int i, double R, const Constants& constants);

// gamma_{i,eps} = max{8 (a_i+b_i)/eps, gamma_i}; throws HypothesisViolated
// when eps >= eps0.
double gamma_i_eps(const HoleSet& holes, int i, double eps, double gamma_i,
                   const Constants& constants);

struct JanAddReport {
  bool single = false;   // each gamma_{i,eps} <= 8 m / eps
  bool squares = false;  // sum gamma^2 < 96 m^2/eps^2
  bool cubes = false;    // sum gamma^3 < 768 m^3/eps^3
  bool pass() const { return single && squares && cubes; }
};
JanAddReport jan_add_bounds(const HoleSet& holes, double eps,
                            const std::vector<double>& gammas_eps);

struct RegionWReport {
  Region region;
  double pinch_min = 0.0;  // sampled Psi^2 range on W
  double pinch_max = 0.0;
  bool pinch_pass = false;     // within [1, (1+eps)^2]
  bool disjoint_pass = false;  // shell and gamma-balls disjoint
  int samples = 0;
};

RegionWReport region_W(const HoleSet& holes, double R, double eps, double lambda,
                       const std::vector<double>& gammas_eps, const Constants& constants,
                       std::uint64_t seed = 31);

struct LambdaEstimate {
  double lambda_numeric = 0.0;   // max sampled d_upper(x,y) - |x-y|
  double lambda_analytic = 0.0;  // 24 R eps
  bool numeric_below_analytic = false;
  int pairs = 0;
};

// Samples pair defects over W' = B(0,R) \ union B(p_i, gamma_{i,eps}).
LambdaEstimate lambda_estimate(const HoleSet& holes, double R, double eps,
                               const std::vector<double>& gammas_eps, int pair_count,
                               const Constants& constants, std::uint64_t seed = 47);

struct M1ContainmentRow {
  int hole = -1;
  double delta = 0.0;
  std::string branch;  // "cylinder-cutoff" or "horizon-floor"
  double radial_integral = 0.0;  // int_{delta}^{a+b} (1+a/r)(1+b/r) dr
  double log_bound = 0.0;        // (a+b) ln((a+b)/delta)
  bool certified = false;
};

struct M1ContainmentReport {
  bool gate_pass = false;  // m < sigma / (20 C1)
  std::vector<M1ContainmentRow> rows;
  bool pass = false;
};

M1ContainmentReport m1_containment(const HoleSet& holes, double R, const Constants& constants);

struct VolumeReport {
  double lambda = 0.0;
  double vol_g_W = 0.0, vol_g_W_err = 0.0;
  double vol_d_W = 0.0;             // closed form
  double vol_d_W_numeric = 0.0;     // QMC cross-check
  double vol_g_bdry = 0.0;
  double vol_d_bdry = 0.0;
  double vol_g_M1mW = 0.0, vol_g_M1mW_err = 0.0;
  double vol_d_M2mW = 0.0;          // closed form
  double vol_d_M2mW_numeric = 0.0;  // QMC cross-check
  double vol_d_M2mW_numeric_err = 0.0;
  // Closed-form bounds with the extracted constants.
  double bound_W = 0.0, bound_bdry = 0.0, bound_excess = 0.0;
  bool pass_W = false, pass_bdry = false, pass_M1 = false, pass_M2 = false;
};

VolumeReport volume_report(const HoleSet& holes, double R, double eps, double lambda,
                           const std::vector<double>& gammas_eps,
                           const std::vector<double>& deltas_R, const ConstantsManifest& manifest,
                           const VolumeBudget& budget = {});

// Full front half of the pipeline: gates, horizons, gamma_i (via the location
// checks), gamma_{i,eps}, lambda.  Throws HypothesisViolated on a failed gate.
struct PipelineParams {
  double R = 0.0, eps = 0.0;
  double mass = 0.0, sigma = 0.0;
  ConstantsManifest manifest;
  std::vector<Gate> gates;
  std::vector<double> delta_iR;
  std::vector<double> gamma_i;
  std::vector<double> gamma_i_eps;
  LambdaEstimate lambda;
  double lambda_used = 0.0;
  JanAddReport jan_add;
  std::vector<HorizonResult> horizons;
};

struct PipelineOptions {
  FinderOptions finder;
  int lambda_pairs = 200;
  std::uint64_t seed = 7777;
  bool use_numeric_lambda = true;  // W and hbar from the sampled lambda
};

PipelineParams build_pipeline(const HoleSet& holes, double R, double eps,
                              const Constants& constants, const PipelineOptions& options = {});

}  // namespace geostat
