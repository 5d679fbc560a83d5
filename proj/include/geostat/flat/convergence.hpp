#pragma once

#include <string>
#include <vector>

#include "geostat/flat/main_bound.hpp"

namespace geostat {

// One manifold of a shrinking-mass sequence.
struct SequenceEntry {
  int k = 0;
  HoleSet holes;
};

struct SequenceSpec {
  std::vector<SequenceEntry> entries;
};

// Fixed positions with alpha = alpha_coef * base^{-k}, beta likewise.
SequenceSpec make_power_sequence(const std::vector<Vec3>& positions, double alpha_coef,
                                 double beta_coef, double base, int k_from, int k_to);

struct ConvergenceRow {
  int k = 0;
  double m = 0.0;
  double sigma = 0.0;
  bool feasible = false;
  std::string note;  // NoFeasibleEpsilon etc.
  double eps = 0.0;
  double lambda_numeric = 0.0;
  double lambda_analytic = 0.0;
  double dF_numeric = 0.0;
  double dF_envelope = 0.0;
  double dDF_numeric = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool strictly_decreasing = false;  // dF over feasible rows
  double final_over_first = 0.0;
  double loglog_slope = 0.0;  // fit of log dF_numeric against log eps
};

struct ConvergenceOptions {
  PipelineOptions pipeline;
  VolumeBudget budget;
  int bisection_iterations = 40;
};

// Per entry: smallest gate-passing eps by bisection over (0, eps0), then the
// full estimate.  Entries with no feasible eps are reported, not fatal.
ConvergenceTable convergence_run(const SequenceSpec& seq, double R, const Constants& constants,
                                 const ConvergenceOptions& options = {});

}  // namespace geostat
