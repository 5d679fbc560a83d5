#pragma once

#include <optional>
#include <vector>

#include "geostat/core/hole_set.hpp"

namespace geostat {

// Total ADM mass of the end at infinity: m = sum (alpha_i + beta_i).
// Summed in ascending index with compensated summation.
double adm_mass(const HoleSet& holes);

// ADM mass of the i-th end: m_i = alpha_i + beta_i
//   + sum_{j != i} (beta_i alpha_j + beta_j alpha_i) / r_ij.
double end_mass(const HoleSet& holes, int i);

// Charge of the i-th end: q_i = beta_i - alpha_i
//   + sum_{j != i} (beta_i alpha_j - beta_j alpha_i) / r_ij.
double end_charge(const HoleSet& holes, int i);

struct SeparationData {
  double sigma = 0.0;                   // min over all sigma_i and |p_i|
  std::vector<double> sigma_i;          // empty when n == 1
  std::vector<double> sigma_i_out;      // empty when n == 1
  std::vector<double> base_distances;   // |p_i|
};

// Throws HoleAtOrigin when some |p_i| vanishes (sigma is then undefined;
// horizon operations do not consume sigma and keep working).
SeparationData separation(const HoleSet& holes);

// sigma when defined, nullopt when a hole sits at the origin.
std::optional<SeparationData> try_separation(const HoleSet& holes);

struct PositiveMassCertificate {
  double mass = 0.0;
  std::vector<std::pair<double, double>> decomposition;  // (alpha_i, beta_i)
  bool pass = false;
  // Symbolic part: m = 0 would force every alpha_i = beta_i = 0, which the
  // validated hole set excludes, so mass > 0 for every valid configuration.
  std::string rigidity_note;
};

PositiveMassCertificate positive_mass_certificate(const HoleSet& holes);

}  // namespace geostat
