#include "geostat/kern/batch.hpp"

#if defined(GEOSTAT_HAVE_AVX2_TU)

#include <immintrin.h>

namespace geostat::kern {

// Four points per lane; the hole loop runs in the same order as the scalar
// kernel so the two variants agree to rounding.
void eval_batch_avx2(const HoleSoA& holes, const double* x, const double* y, const double* z,
                     std::size_t n, const JetOut& out) {
  const std::size_t nh = holes.size();
  const bool want_grad = out.dchi_x != nullptr;
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    const __m256d zi = _mm256_loadu_pd(z + i);
    __m256d chi = one, psi = one;
    __m256d gcx = _mm256_setzero_pd(), gcy = _mm256_setzero_pd(), gcz = _mm256_setzero_pd();
    __m256d gpx = _mm256_setzero_pd(), gpy = _mm256_setzero_pd(), gpz = _mm256_setzero_pd();
    for (std::size_t h = 0; h < nh; ++h) {
      const __m256d dx = _mm256_sub_pd(xi, _mm256_set1_pd(holes.px[h]));
      const __m256d dy = _mm256_sub_pd(yi, _mm256_set1_pd(holes.py[h]));
      const __m256d dz = _mm256_sub_pd(zi, _mm256_set1_pd(holes.pz[h]));
      __m256d rho2 = _mm256_mul_pd(dx, dx);
      rho2 = _mm256_fmadd_pd(dy, dy, rho2);
      rho2 = _mm256_fmadd_pd(dz, dz, rho2);
      const __m256d inv = _mm256_div_pd(one, _mm256_sqrt_pd(rho2));
      const __m256d a = _mm256_set1_pd(holes.alpha[h]);
      const __m256d b = _mm256_set1_pd(holes.beta[h]);
      chi = _mm256_fmadd_pd(a, inv, chi);
      psi = _mm256_fmadd_pd(b, inv, psi);
      if (want_grad) {
        const __m256d inv3 = _mm256_div_pd(inv, rho2);
        const __m256d ca = _mm256_mul_pd(a, inv3);
        const __m256d cb = _mm256_mul_pd(b, inv3);
        gcx = _mm256_fnmadd_pd(ca, dx, gcx);
        gcy = _mm256_fnmadd_pd(ca, dy, gcy);
        gcz = _mm256_fnmadd_pd(ca, dz, gcz);
        gpx = _mm256_fnmadd_pd(cb, dx, gpx);
        gpy = _mm256_fnmadd_pd(cb, dy, gpy);
        gpz = _mm256_fnmadd_pd(cb, dz, gpz);
      }
    }
    _mm256_storeu_pd(out.chi + i, chi);
    _mm256_storeu_pd(out.psi + i, psi);
    if (want_grad) {
      _mm256_storeu_pd(out.dchi_x + i, gcx);
      _mm256_storeu_pd(out.dchi_y + i, gcy);
      _mm256_storeu_pd(out.dchi_z + i, gcz);
      _mm256_storeu_pd(out.dpsi_x + i, gpx);
      _mm256_storeu_pd(out.dpsi_y + i, gpy);
      _mm256_storeu_pd(out.dpsi_z + i, gpz);
    }
  }

  if (i < n) {
    JetOut tail = out;
    tail.chi += i;
    tail.psi += i;
    if (want_grad) {
      tail.dchi_x += i;
      tail.dchi_y += i;
      tail.dchi_z += i;
      tail.dpsi_x += i;
      tail.dpsi_y += i;
      tail.dpsi_z += i;
    }
    eval_batch_scalar(holes, x + i, y + i, z + i, n - i, tail);
  }
}

}  // namespace geostat::kern

#endif  // GEOSTAT_HAVE_AVX2_TU
