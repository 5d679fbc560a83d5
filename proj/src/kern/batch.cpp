#include "geostat/kern/batch.hpp"

#include <atomic>

namespace geostat::kern {

HoleSoA HoleSoA::from(const HoleSet& set) {
  HoleSoA soa;
  const std::size_t n = set.holes.size();
  soa.px.reserve(n);
  soa.py.reserve(n);
  soa.pz.reserve(n);
  soa.alpha.reserve(n);
  soa.beta.reserve(n);
  for (const Hole& h : set.holes) {
    soa.px.push_back(h.p.x);
    soa.py.push_back(h.p.y);
    soa.pz.push_back(h.p.z);
    soa.alpha.push_back(h.alpha);
    soa.beta.push_back(h.beta);
  }
  return soa;
}

namespace {

Isa detect() {
#if defined(GEOSTAT_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa> g_isa{detect()};

}  // namespace

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool force_isa(Isa isa) {
  if (isa == Isa::Avx2) {
#if defined(GEOSTAT_HAVE_AVX2_TU)
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return false;
#else
    return false;
#endif
  }
  g_isa.store(isa, std::memory_order_relaxed);
  return true;
}

void eval_batch(const HoleSoA& holes, const double* x, const double* y, const double* z,
                std::size_t n, const JetOut& out) {
#if defined(GEOSTAT_HAVE_AVX2_TU)
  if (g_isa.load(std::memory_order_relaxed) == Isa::Avx2) {
    eval_batch_avx2(holes, x, y, z, n, out);
    return;
  }
#endif
  eval_batch_scalar(holes, x, y, z, n, out);
}

}  // namespace geostat::kern
