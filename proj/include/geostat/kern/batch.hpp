#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geostat/core/hole_set.hpp"

namespace geostat::kern {

// Structure-of-arrays hole data for the batch kernels.
struct HoleSoA {
  std::vector<double> px, py, pz, alpha, beta;

  static HoleSoA from(const HoleSet& set);
  std::size_t size() const { return px.size(); }
};

// Outputs for a batch of n points.  Gradient pointers may be null when the
// caller only needs values.
struct JetOut {
  double* chi = nullptr;
  double* psi = nullptr;
  double* dchi_x = nullptr;
  double* dchi_y = nullptr;
  double* dchi_z = nullptr;
  double* dpsi_x = nullptr;
  double* dpsi_y = nullptr;
  double* dpsi_z = nullptr;
};

using BatchFn = void (*)(const HoleSoA&, const double* x, const double* y, const double* z,
                         std::size_t n, const JetOut& out);

// eval_batch computes chi/psi (and gradients when requested) at n points.
// No hole-coincidence guard: callers keep their points off the holes.
void eval_batch(const HoleSoA& holes, const double* x, const double* y, const double* z,
                std::size_t n, const JetOut& out);

enum class Isa { Scalar, Avx2 };

Isa active_isa();
std::string isa_name(Isa isa);
// Test hook; returns false when the requested ISA is unavailable.
bool force_isa(Isa isa);

// Reference kernel, always available (equivalence tests target this).
void eval_batch_scalar(const HoleSoA& holes, const double* x, const double* y, const double* z,
                       std::size_t n, const JetOut& out);
#if defined(GEOSTAT_HAVE_AVX2_TU)
void eval_batch_avx2(const HoleSoA& holes, const double* x, const double* y, const double* z,
                     std::size_t n, const JetOut& out);
#endif

}  // namespace geostat::kern
