#include "geostat/flat/convergence.hpp"

#include <cmath>

#include "geostat/core/masses.hpp"

namespace geostat {

SequenceSpec make_power_sequence(const std::vector<Vec3>& positions, double alpha_coef,
                                 double beta_coef, double base, int k_from, int k_to) {
  SequenceSpec spec;
  for (int k = k_from; k <= k_to; ++k) {
    SequenceEntry entry;
    entry.k = k;
    entry.holes.strict_beta = true;
    const double scale = std::pow(base, -k);
    for (const Vec3& p : positions)
      entry.holes.holes.push_back({p, alpha_coef * scale, beta_coef * scale});
    spec.entries.push_back(std::move(entry));
  }
  return spec;
}

ConvergenceTable convergence_run(const SequenceSpec& seq, double R, const Constants& constants,
                                 const ConvergenceOptions& options) {
  ConvergenceTable table;

  for (const SequenceEntry& entry : seq.entries) {
    ConvergenceRow row;
    row.k = entry.k;
    row.m = adm_mass(entry.holes);
    row.sigma = separation(entry.holes).sigma;

    auto pass = [&](double eps) {
      return gates_pass(evaluate_gates(entry.holes, R, eps, constants));
    };

    // Scan for any feasible eps, then bisect down to the lower boundary of
    // the feasible interval.
    double hi = -1.0;
    const int scan = 256;
    for (int i = scan - 1; i >= 1; --i) {
      const double eps = constants.eps0 * i / scan;
      if (pass(eps)) hi = eps;  // keep the smallest passing scan point
    }
    if (hi < 0.0) {
      row.feasible = false;
      row.note = "NoFeasibleEpsilon";
      table.rows.push_back(row);
      continue;
    }
    double lo = std::max(0.0, hi - constants.eps0 / scan);
    for (int i = 0; i < options.bisection_iterations; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (pass(mid))
        hi = mid;
      else
        lo = mid;
    }
    row.eps = hi;
    row.feasible = true;

    const FlatDistanceEstimate est =
        main_bound(entry.holes, R, row.eps, constants, options.pipeline, options.budget);
    row.lambda_numeric = est.params.lambda.lambda_numeric;
    row.lambda_analytic = est.params.lambda.lambda_analytic;
    row.dF_numeric = est.dF_bound;
    row.dF_envelope = est.envelope_dF;
    row.dDF_numeric = est.dDF_bound;
    table.rows.push_back(row);
  }

  // Trend diagnostics over the feasible rows.
  std::vector<const ConvergenceRow*> ok;
  for (const auto& r : table.rows)
    if (r.feasible) ok.push_back(&r);
  table.strictly_decreasing = ok.size() >= 2;
  for (std::size_t i = 1; i < ok.size(); ++i)
    if (!(ok[i]->dF_numeric < ok[i - 1]->dF_numeric)) table.strictly_decreasing = false;
  if (!ok.empty()) table.final_over_first = ok.back()->dF_numeric / ok.front()->dF_numeric;

  if (ok.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto* r : ok) {
      const double x = std::log(r->eps), y = std::log(r->dF_numeric);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(ok.size());
    table.loglog_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return table;
}

}  // namespace geostat
