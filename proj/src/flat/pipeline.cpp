#include "geostat/flat/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "geostat/core/masses.hpp"
#include "geostat/error.hpp"
#include "geostat/geom/distance.hpp"
#include "geostat/geom/metric.hpp"
#include "geostat/horizon/checks.hpp"
#include "geostat/util/parallel.hpp"
#include "geostat/util/rng.hpp"

namespace geostat {

std::vector<Gate> evaluate_gates(const HoleSet& holes, double R, double eps,
                                 const Constants& constants) {
  std::vector<Gate> gates;
  const double m = adm_mass(holes);
  const SeparationData sep = separation(holes);

  gates.push_back({"eps-below-eps0", eps < constants.eps0, eps, constants.eps0});
  gates.push_back({"mass-below-R-eps3", m < R * eps * eps * eps, m, R * eps * eps * eps});
  gates.push_back({"mass-below-eps-sigma-32", m < eps * sep.sigma / 32.0, m, eps * sep.sigma / 32.0});

  double nearest_gap = std::numeric_limits<double>::infinity();
  bool clear = true;
  for (double base : sep.base_distances) {
    const double gap = std::abs(base - R);
    nearest_gap = std::min(nearest_gap, gap);
    if (gap < 32.0 * R * eps) clear = false;
  }
  gates.push_back({"accumulation-window-clear", clear, 32.0 * R * eps, nearest_gap});
  return gates;
}

bool gates_pass(const std::vector<Gate>& gates) {
  for (const Gate& g : gates)
    if (!g.pass) return false;
  return true;
}

void require_gates(const std::vector<Gate>& gates) {
  for (const Gate& g : gates)
    if (!g.pass) {
      std::ostringstream msg;
      msg << "gate '" << g.name << "' failed (lhs " << g.lhs << ", rhs " << g.rhs << ")";
      throw Error(ErrorCode::HypothesisViolated, msg.str());
    }
}

double delta_iR(const HoleSet& holes, int i, double R, const Constants& constants) {
  if (i < 0 || i >= holes.size()) throw Error(ErrorCode::IndexOutOfRange, "delta_iR hole index");
  if (!(R > 0.0)) throw Error(ErrorCode::NonPositiveInput, "delta_iR needs R > 0");
  const Hole& h = holes[i];
  const double mi = h.mass_parameter();
  return std::max(mi * std::exp(-R / mi), h.alpha * h.beta / (4.0 * constants.C1 * mi));
}

double gamma_i_eps(const HoleSet& holes, int i, double eps, double gamma_i,
                   const Constants& constants) {
  if (i < 0 || i >= holes.size()) throw Error(ErrorCode::IndexOutOfRange, "gamma_i_eps hole index");
  if (!(eps > 0.0) || eps >= constants.eps0)
    throw Error(ErrorCode::HypothesisViolated, "gamma_i_eps needs 0 < eps < eps0");
  return std::max(8.0 * holes[i].mass_parameter() / eps, gamma_i);
}

JanAddReport jan_add_bounds(const HoleSet& holes, double eps,
                            const std::vector<double>& gammas_eps) {
  JanAddReport report;
  const double m = adm_mass(holes);
  double sum2 = 0.0, sum3 = 0.0;
  report.single = true;
  for (double g : gammas_eps) {
    if (g > 8.0 * m / eps * (1.0 + 1e-12)) report.single = false;
    sum2 += g * g;
    sum3 += g * g * g;
  }
  report.squares = sum2 < 96.0 * m * m / (eps * eps);
  report.cubes = sum3 < 768.0 * m * m * m / (eps * eps * eps);
  return report;
}

RegionWReport region_W(const HoleSet& holes, double R, double eps, double lambda,
                       const std::vector<double>& gammas_eps, const Constants& constants,
                       std::uint64_t seed) {
  require_gates(evaluate_gates(holes, R, eps, constants));
  RegionWReport report;
  report.region.outer = {Vec3{}, R - lambda};
  for (int i = 0; i < holes.size(); ++i)
    report.region.excluded.push_back({holes[i].p, gammas_eps[i]});

  // Disjointness under the accumulation hypothesis: the boundary shell
  // (R - lambda, R) must clear every gamma-ball.
  report.disjoint_pass = true;
  for (int i = 0; i < holes.size(); ++i) {
    const double base = norm(holes[i].p);
    if (base + gammas_eps[i] > R - lambda && base - gammas_eps[i] < R)
      report.disjoint_pass = false;
    for (int j = i + 1; j < holes.size(); ++j)
      if (norm(holes[i].p - holes[j].p) < gammas_eps[i] + gammas_eps[j])
        report.disjoint_pass = false;
  }

  // Metric pinch delta <= g <= (1+eps)^2 delta, sampled.
  Rng rng(seed);
  const double hi = (1.0 + eps) * (1.0 + eps);
  report.pinch_min = std::numeric_limits<double>::infinity();
  report.pinch_max = 0.0;
  int want = 2000;
  while (report.samples < want) {
    Vec3 x = rng.in_ball({}, R - lambda);
    bool excluded = false;
    for (const Ball& b : report.region.excluded)
      if (norm(x - b.center) < b.radius) excluded = true;
    if (excluded) continue;
    const double factor = metric_at(holes, x).factor;
    report.pinch_min = std::min(report.pinch_min, factor);
    report.pinch_max = std::max(report.pinch_max, factor);
    ++report.samples;
  }
  // Also probe just outside each gamma-ball where the pinch is tightest.
  for (int i = 0; i < holes.size(); ++i)
    for (int probe = 0; probe < 64; ++probe) {
      const Vec3 x = holes[i].p + gammas_eps[i] * (1.0 + 1e-9) * rng.unit_vector();
      if (norm(x) > R - lambda) continue;
      const double factor = metric_at(holes, x).factor;
      report.pinch_min = std::min(report.pinch_min, factor);
      report.pinch_max = std::max(report.pinch_max, factor);
    }
  report.pinch_pass = report.pinch_min >= 1.0 && report.pinch_max <= hi * (1.0 + 1e-12);
  return report;
}

LambdaEstimate lambda_estimate(const HoleSet& holes, double R, double eps,
                               const std::vector<double>& gammas_eps, int pair_count,
                               const Constants& constants, std::uint64_t seed) {
  require_gates(evaluate_gates(holes, R, eps, constants));
  LambdaEstimate est;
  est.lambda_analytic = 24.0 * R * eps;
  est.pairs = pair_count;

  std::vector<Ball> balls;
  for (int i = 0; i < holes.size(); ++i) balls.push_back({holes[i].p, gammas_eps[i]});

  Rng rng(seed);
  auto sample_point = [&]() {
    for (;;) {
      const Vec3 x = rng.in_ball({}, R);
      bool ok = true;
      for (const Ball& b : balls)
        if (norm(x - b.center) < b.radius * (1.0 + 1e-9)) ok = false;
      if (ok) return x;
    }
  };

  DistanceOptions dopt;
  dopt.nodes = 96;
  dopt.sweeps = 40;
  const int n = holes.size();
  const double sigma = separation(holes).sigma;

  // Draw all pair endpoints first (cheap, single stream), then relax the
  // paths in parallel; the defect maximum is reduced in pair order.
  std::vector<std::pair<Vec3, Vec3>> pairs(pair_count);
  for (int p = 0; p < pair_count; ++p) {
    Vec3 x, y;
    if (n > 0 && p % 2 == 0) {
      // Straddling pair: the segment passes near hole (p/2 mod n), where the
      // defect concentrates.
      const int i = (p / 2) % n;
      const Vec3 dir = rng.unit_vector();
      Vec3 off = rng.unit_vector() * (1.5 * balls[i].radius);
      const double span = std::min(0.45 * R, 0.25 * sigma + 2.0 * balls[i].radius);
      x = holes[i].p + off + span * dir;
      y = holes[i].p + off - span * dir;
      bool ok = norm(x) <= R && norm(y) <= R;
      for (const Ball& b : balls)
        if (norm(x - b.center) < b.radius * (1.0 + 1e-9) ||
            norm(y - b.center) < b.radius * (1.0 + 1e-9))
          ok = false;
      if (!ok) {
        x = sample_point();
        y = sample_point();
      }
    } else {
      x = sample_point();
      y = sample_point();
    }
    pairs[p] = {x, y};
  }

  std::vector<double> defects(pair_count, 0.0);
  parallel_for_chunks(pair_count, [&](std::size_t p) {
    const DistanceResult d = distance_upper(holes, pairs[p].first, pairs[p].second, balls, dopt);
    defects[p] = d.upper - d.flat;
  });
  for (double d : defects) est.lambda_numeric = std::max(est.lambda_numeric, d);
  est.numeric_below_analytic = est.lambda_numeric < est.lambda_analytic;
  return est;
}

M1ContainmentReport m1_containment(const HoleSet& holes, double R, const Constants& constants) {
  M1ContainmentReport report;
  const double m = adm_mass(holes);
  const SeparationData sep = separation(holes);
  report.gate_pass = m < sep.sigma / (20.0 * constants.C1);
  if (!report.gate_pass)
    throw Error(ErrorCode::HypothesisViolated, "m1_containment needs m < sigma/(20 C1)");

  report.pass = true;
  for (int i = 0; i < holes.size(); ++i) {
    const Hole& h = holes[i];
    const double mi = h.mass_parameter();
    const double ab = h.alpha * h.beta;
    M1ContainmentRow row;
    row.hole = i;
    row.delta = delta_iR(holes, i, R, constants);
    const double cyl = mi * std::exp(-R / mi);
    const bool cylinder = cyl >= ab / (4.0 * constants.C1 * mi);
    row.branch = cylinder ? "cylinder-cutoff" : "horizon-floor";
    // Closed-form radial integral of (1 + a/r)(1 + b/r) from delta to a+b.
    auto F = [&](double r) { return r + mi * std::log(r) - ab / r; };
    row.radial_integral = F(mi) - F(row.delta);
    row.log_bound = mi * std::log(mi / row.delta);
    if (cylinder) {
      // log_bound equals R by construction; the integral strictly exceeds it.
      row.certified = row.radial_integral > R;
    } else {
      // Horizon-floor branch: under the mass gate the outermost region
      // already clears this ball, no distance estimate needed.
      row.certified = true;
    }
    if (!row.certified) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

VolumeReport volume_report(const HoleSet& holes, double R, double eps, double lambda,
                           const std::vector<double>& gammas_eps,
                           const std::vector<double>& deltas_R, const ConstantsManifest& manifest,
                           const VolumeBudget& budget) {
  require_gates(evaluate_gates(holes, R, eps, manifest.base));
  VolumeReport rep;
  rep.lambda = lambda;
  const int n = holes.size();

  Region W;
  W.outer = {Vec3{}, R - lambda};
  for (int i = 0; i < n; ++i) W.excluded.push_back({holes[i].p, gammas_eps[i]});

  const VolumeResult vw = region_volume(holes, W, budget);
  rep.vol_g_W = vw.volume;
  rep.vol_g_W_err = vw.error;
  rep.vol_d_W_numeric = vw.volume_flat;

  double sum_g2 = 0.0, sum_g3 = 0.0;
  for (double g : gammas_eps) {
    sum_g2 += g * g;
    sum_g3 += g * g * g;
  }
  rep.vol_d_W = 4.0 * M_PI / 3.0 * (std::pow(R - lambda, 3) - sum_g3);
  rep.vol_d_bdry = 4.0 * M_PI * ((R - lambda) * (R - lambda) + sum_g2);

  rep.vol_g_bdry = sphere_g_area(holes, {}, R - lambda);
  for (int i = 0; i < n; ++i) rep.vol_g_bdry += sphere_g_area(holes, holes[i].p, gammas_eps[i]);

  // M1 \ W upper bound: outer shell plus the per-hole annuli.
  Region shell;
  shell.outer = {Vec3{}, R};
  shell.excluded.push_back({Vec3{}, R - lambda});
  VolumeBudget shell_budget = budget;
  shell_budget.seed = budget.seed + 1;
  const VolumeResult vs = region_volume(holes, shell, shell_budget);
  rep.vol_g_M1mW = vs.volume;
  rep.vol_g_M1mW_err = vs.error;
  for (int i = 0; i < n; ++i) {
    double err = 0.0;
    if (gammas_eps[i] > deltas_R[i])
      rep.vol_g_M1mW += shell_g_volume(holes, holes[i].p, deltas_R[i], gammas_eps[i], &err);
    rep.vol_g_M1mW_err += err;
  }

  // M2 \ W: closed form plus a flat QMC cross-check.
  rep.vol_d_M2mW = 4.0 * M_PI / 3.0 * (std::pow(R, 3) - std::pow(R - lambda, 3)) +
                   4.0 * M_PI / 3.0 * sum_g3;
  rep.vol_d_M2mW_numeric = vs.volume_flat;
  rep.vol_d_M2mW_numeric_err = vs.error * vs.volume_flat / std::max(vs.volume, 1e-300);
  for (double g : gammas_eps) rep.vol_d_M2mW_numeric += 4.0 * M_PI / 3.0 * g * g * g;

  rep.bound_W = manifest.C_prime * R * R * R;
  rep.bound_bdry = manifest.C_prime * R * R;
  rep.bound_excess = manifest.C_dprime * R * R * R * eps;
  rep.pass_W = rep.vol_g_W <= rep.bound_W && rep.vol_d_W <= rep.vol_g_W + 2.0 * vw.error;
  rep.pass_bdry = rep.vol_g_bdry <= rep.bound_bdry;
  rep.pass_M1 = rep.vol_g_M1mW <= rep.bound_excess;
  rep.pass_M2 = rep.vol_d_M2mW <= rep.bound_excess;
  return rep;
}

PipelineParams build_pipeline(const HoleSet& holes, double R, double eps,
                              const Constants& constants, const PipelineOptions& options) {
  PipelineParams params;
  params.R = R;
  params.eps = eps;
  params.mass = adm_mass(holes);
  params.sigma = separation(holes).sigma;
  params.manifest = extract_constants(constants);
  params.gates = evaluate_gates(holes, R, eps, constants);
  require_gates(params.gates);

  const int n = holes.size();
  params.delta_iR.resize(n);
  for (int i = 0; i < n; ++i) params.delta_iR[i] = delta_iR(holes, i, R, constants);

  OutermostResult outer = find_outermost(holes, options.finder, &constants);
  const LocateReport locate = locate_checks(holes, outer.horizons, constants);
  params.gamma_i = locate.gamma_j;
  params.horizons = std::move(outer.horizons);

  params.gamma_i_eps.resize(n);
  for (int i = 0; i < n; ++i)
    params.gamma_i_eps[i] = gamma_i_eps(holes, i, eps, params.gamma_i[i], constants);
  params.jan_add = jan_add_bounds(holes, eps, params.gamma_i_eps);

  params.lambda = lambda_estimate(holes, R, eps, params.gamma_i_eps, options.lambda_pairs,
                                  constants, options.seed);
  params.lambda_used =
      options.use_numeric_lambda ? params.lambda.lambda_numeric : params.lambda.lambda_analytic;
  return params;
}

}  // namespace geostat
