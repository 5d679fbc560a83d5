#include <cmath>
#include <vector>

#include "geostat/core/conformal.hpp"
#include "geostat/kern/batch.hpp"
#include "geostat/util/rng.hpp"
#include "harness.hpp"

using namespace geostat;

namespace {

struct Batch {
  std::vector<double> x, y, z, chi, psi, gcx, gcy, gcz, gpx, gpy, gpz;
  kern::JetOut out(bool grads) {
    kern::JetOut o;
    o.chi = chi.data();
    o.psi = psi.data();
    if (grads) {
      o.dchi_x = gcx.data();
      o.dchi_y = gcy.data();
      o.dchi_z = gcz.data();
      o.dpsi_x = gpx.data();
      o.dpsi_y = gpy.data();
      o.dpsi_z = gpz.data();
    }
    return o;
  }
  explicit Batch(std::size_t n)
      : x(n), y(n), z(n), chi(n), psi(n), gcx(n), gcy(n), gcz(n), gpx(n), gpy(n), gpz(n) {}
};

HoleSet random_holes(Rng& rng, int n) {
  HoleSet s;
  for (int i = 0; i < n; ++i)
    s.holes.push_back({{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)},
                       rng.uniform(0.01, 1.0), rng.uniform(0.01, 1.0)});
  return s;
}

}  // namespace

TEST(scalar_kernel_matches_conformal_eval) {
  Rng rng(1);
  const HoleSet holes = random_holes(rng, 3);
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  const std::size_t n = 37;  // odd size exercises the tail path
  Batch b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.x[i] = rng.uniform(-6, 6);
    b.y[i] = rng.uniform(-6, 6);
    b.z[i] = rng.uniform(-6, 6);
  }
  kern::eval_batch_scalar(soa, b.x.data(), b.y.data(), b.z.data(), n, b.out(true));
  for (std::size_t i = 0; i < n; ++i) {
    const ConformalJet jet = conformal_eval(holes, {b.x[i], b.y[i], b.z[i]}, 1);
    CHECK_REL(b.chi[i], jet.chi, 1e-14);
    CHECK_REL(b.psi[i], jet.psi, 1e-14);
    CHECK_REL(b.gcx[i], jet.grad_chi.x, 1e-12);
    CHECK_REL(b.gpz[i], jet.grad_psi.z, 1e-12);
  }
}

TEST(simd_variant_matches_scalar_reference) {
#if defined(GEOSTAT_HAVE_AVX2_TU)
  if (!kern::force_isa(kern::Isa::Avx2)) {
    std::printf("    (avx2 unavailable on this host; dispatch check only)\n");
    CHECK(kern::active_isa() == kern::Isa::Scalar);
    return;
  }
  Rng rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    const HoleSet holes = random_holes(rng, 1 + trial);
    const kern::HoleSoA soa = kern::HoleSoA::from(holes);
    const std::size_t n = 1000 + trial;  // varying tails
    Batch ref(n), simd(n);
    for (std::size_t i = 0; i < n; ++i) {
      ref.x[i] = simd.x[i] = rng.uniform(-20, 20);
      ref.y[i] = simd.y[i] = rng.uniform(-20, 20);
      ref.z[i] = simd.z[i] = rng.uniform(-20, 20);
    }
    kern::eval_batch_scalar(soa, ref.x.data(), ref.y.data(), ref.z.data(), n, ref.out(true));
    kern::eval_batch_avx2(soa, simd.x.data(), simd.y.data(), simd.z.data(), n, simd.out(true));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK_REL(simd.chi[i], ref.chi[i], 1e-14);
      CHECK_REL(simd.psi[i], ref.psi[i], 1e-14);
      CHECK_NEAR(simd.gcx[i], ref.gcx[i], 1e-13 * (1.0 + std::abs(ref.gcx[i])));
      CHECK_NEAR(simd.gcy[i], ref.gcy[i], 1e-13 * (1.0 + std::abs(ref.gcy[i])));
      CHECK_NEAR(simd.gpz[i], ref.gpz[i], 1e-13 * (1.0 + std::abs(ref.gpz[i])));
    }
  }
  kern::force_isa(kern::Isa::Avx2);
#else
  CHECK(kern::active_isa() == kern::Isa::Scalar);
#endif
}

TEST(dispatch_respects_forced_isa) {
  const kern::Isa before = kern::active_isa();
  CHECK(kern::force_isa(kern::Isa::Scalar));
  CHECK(kern::active_isa() == kern::Isa::Scalar);
  Rng rng(3);
  const HoleSet holes = random_holes(rng, 2);
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  Batch b(8);
  for (int i = 0; i < 8; ++i) {
    b.x[i] = rng.uniform(-4, 4);
    b.y[i] = rng.uniform(-4, 4);
    b.z[i] = rng.uniform(-4, 4);
  }
  kern::eval_batch(soa, b.x.data(), b.y.data(), b.z.data(), 8, b.out(false));
  for (int i = 0; i < 8; ++i) CHECK(b.chi[i] > 1.0);
  kern::force_isa(before);
}

int main() { return testing::run_all("kern"); }
