#include <cmath>

#include "geostat/core/masses.hpp"
#include "geostat/geom/annulus.hpp"
#include "geostat/geom/area.hpp"
#include "geostat/geom/constraints.hpp"
#include "geostat/geom/distance.hpp"
#include "geostat/geom/metric.hpp"
#include "geostat/geom/volume.hpp"
#include "geostat/util/rng.hpp"
#include "harness.hpp"
#include "oracles.hpp"

using namespace geostat;

namespace {

HoleSet schwarzschild(double m = 1.0, const Vec3& p = {}) {
  HoleSet s;
  s.holes.push_back({p, m / 2.0, m / 2.0});
  return s;
}

HoleSet two_hole_asym() {
  HoleSet s;
  s.holes.push_back({{0, 0, 0}, 0.1, 0.3});
  s.holes.push_back({{1.5, 0, 0}, 0.2, 0.4});
  return s;
}

HoleSet random_strict(Rng& rng, int n, double mass_scale = 0.3) {
  HoleSet s;
  for (int i = 0; i < n; ++i) {
    Vec3 p;
    for (;;) {
      p = {rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
      bool ok = norm(p) > 1.0;
      for (const Hole& h : s.holes) ok = ok && norm(p - h.p) > 1.0;
      if (ok) break;
    }
    s.holes.push_back({p, mass_scale * rng.uniform(0.2, 1.0), mass_scale * rng.uniform(0.2, 1.0)});
  }
  return s;
}

oracles::MetricFn metric_fn(const HoleSet& holes) {
  return [&holes](const Vec3& x) {
    const double f = conformal_eval(holes, x, 0).Psi;
    std::array<std::array<double, 3>, 3> g{};
    g[0][0] = g[1][1] = g[2][2] = f * f;
    return g;
  };
}

}  // namespace

TEST(metric_factor_values) {
  const HoleSet s = schwarzschild();
  const MetricSample m = metric_at(s, {0.5, 0, 0});
  CHECK_REL(m.factor, 16.0, 1e-15);
  CHECK_REL(m.tensor(0, 0), 16.0, 1e-15);
  CHECK(m.tensor(0, 1) == 0.0);
  CHECK(metric_at(s, {800, 0, 0}).factor < 1.01);
  CHECK(metric_at(s, {800, 0, 0}).factor > 1.0);
}

TEST(curvature_zero_charge_scalar_vanish) {
  // alpha_i = beta_i kills the charge and the scalar curvature.
  HoleSet s;
  s.holes.push_back({{0, 0, 0}, 0.3, 0.3});
  s.holes.push_back({{2, 0, 0}, 0.5, 0.5});
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Vec3 x = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (nearest_hole(s, x).distance < 0.1) continue;
    const CurvatureSample c = curvature_at(s, x);
    CHECK(std::abs(c.scalar_curvature) < 1e-8);
    CHECK(std::abs(c.e_norm_sq) < 1e-12);
  }
}

TEST(curvature_scalar_matches_fd_oracle) {
  const HoleSet s = two_hole_asym();
  const Vec3 pts[] = {{0, 1, 0}, {0.7, 0.4, -0.3}, {-0.5, -0.8, 0.6}};
  for (const Vec3& x : pts) {
    const CurvatureSample c = curvature_at(s, x);
    // Richardson-extrapolated second-order FD of the closed-form metric.
    const double h = 1e-3 * nearest_hole(s, x).distance;
    const double r1 = oracles::scalar_curvature_fd(metric_fn(s), x, h);
    const double r2 = oracles::scalar_curvature_fd(metric_fn(s), x, h / 2.0);
    const double rext = (4.0 * r2 - r1) / 3.0;
    CHECK_REL(c.scalar_curvature, rext, 1e-6);
    // Hamiltonian identity at the same point.
    CHECK_REL(c.scalar_curvature, 2.0 * c.e_norm_sq, 1e-8);
  }
}

TEST(curvature_christoffels_symmetric_and_flat_limit) {
  const HoleSet s = two_hole_asym();
  const CurvatureSample c = curvature_at(s, {0.3, 0.9, 0.2});
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(c.christoffels[k][i][j] == c.christoffels[k][j][i]);

  const CurvatureSample far = curvature_at(s, {6000, 1000, -500});
  CHECK(std::abs(far.scalar_curvature) < 1e-8);
  CHECK(std::abs(far.sectional_min) < 1e-7);
  CHECK(std::abs(far.sectional_max) < 1e-7);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(far.christoffels[k][i][j]) < 1e-6);
}

TEST(sectional_curvature_schwarzschild_values) {
  // At the horizon (areal radius 2m) the slice has K = +2m/(2m)^3 on the
  // plane normal to the radial direction and -m/(2m)^3 on radial planes.
  const HoleSet s = schwarzschild();
  const CurvaturePoint cp = curvature_point(s, {0.5, 0, 0});
  CHECK_REL(sectional_curvature(cp.sample, cp.jet.Psi, {1, 0, 0}), 0.25, 1e-12);
  CHECK_REL(sectional_curvature(cp.sample, cp.jet.Psi, {0, 1, 0}), -0.125, 1e-12);
  CHECK_NEAR(cp.sample.scalar_curvature, 0.0, 1e-14);
  CHECK_REL(cp.sample.sectional_max, 0.25, 1e-12);
  CHECK_REL(cp.sample.sectional_min, -0.125, 1e-12);
}

TEST(verify_constraints_reports) {
  Rng rng(5);
  const HoleSet s = random_strict(rng, 2);
  const ConstraintReport rep = verify_constraints(s, 200, 99, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.max_rel_residual < 1e-6);
  CHECK(rep.max_div_residual < 1e-6);
  CHECK(static_cast<int>(rep.rows.size()) == 200);

  // Zero-charge config: tiny absolute scalar curvature.
  HoleSet zc;
  zc.holes.push_back({{0, 0, 0}, 0.4, 0.4});
  zc.holes.push_back({{3, 0, 0}, 0.2, 0.2});
  const ConstraintReport rep2 = verify_constraints(zc, 200, 7, 1e-6);
  CHECK(rep2.pass);
  CHECK(rep2.max_abs_R_zero_charge < 1e-8);
}

TEST(surface_area_schwarzschild_horizon_sphere) {
  const HoleSet s = schwarzschild();
  const RadialSurface sphere = RadialSurface::sphere({}, 0.5, 64, 128);
  const AreaResult a = surface_area(s, sphere);
  CHECK_REL(a.area, 16.0 * M_PI, 1e-12);
  CHECK(a.error < 1e-8);
}

TEST(surface_area_far_sphere_flat_and_refinement) {
  const HoleSet s = schwarzschild(1e-3, {50, 0, 0});
  const RadialSurface sphere = RadialSurface::sphere({}, 1.0, 24, 48);
  const AreaResult coarse = surface_area(s, sphere);
  CHECK_REL(coarse.area, 4.0 * M_PI, 1e-3);

  const RadialSurface fine = RadialSurface::sphere({}, 1.0, 48, 96);
  const AreaResult refined = surface_area(s, fine);
  CHECK(std::abs(refined.area - coarse.area) <= std::max(coarse.error, 1e-12));
}

TEST(surface_area_aspherical_graph_against_oracle) {
  // r(theta) = 1 + 0.2 cos(theta): flat area has the closed form
  // int 2 pi r sqrt(r^2 + r_theta^2) sin(theta) dtheta.
  const HoleSet far_hole = schwarzschild(1e-9, {1000, 0, 0});
  RadialSurface surf = RadialSurface::sphere({}, 1.0, 64, 128);
  const SphereGrid& g = *surf.grid;
  for (int j = 0; j < g.ntheta(); ++j)
    for (int k = 0; k < g.nphi(); ++k)
      surf.r[g.idx(j, k)] = 1.0 + 0.2 * g.cos_theta(j);
  const double oracle = oracles::integrate(
      [](double th) {
        const double r = 1.0 + 0.2 * std::cos(th);
        const double rt = -0.2 * std::sin(th);
        return 2.0 * M_PI * r * std::sqrt(r * r + rt * rt) * std::sin(th);
      },
      0.0, M_PI, 1e-13);
  const AreaResult a = surface_area(far_hole, surf);
  // Graph derivatives come from finite differences, so accuracy tops out
  // around 1e-7 relative here.
  CHECK_REL(a.area, oracle, 1e-6);
}

TEST(surface_through_hole_detected) {
  const HoleSet s = schwarzschild(1.0, {0.5, 0, 0});
  const RadialSurface sphere = RadialSurface::sphere({}, 0.5, 16, 32);
  CHECK_THROWS(ErrorCode::SurfaceThroughHole, surface_area(s, sphere));
}

TEST(region_volume_flat_limit_and_positivity) {
  const HoleSet s = schwarzschild(1e-4, {40, 0, 0});
  Region ball{{Vec3{}, 1.0}, {}};
  VolumeBudget budget;
  budget.points = 1 << 16;
  const VolumeResult v = region_volume(s, ball, budget);
  CHECK_NEAR(v.volume, 4.0 * M_PI / 3.0, 5e-3);
  CHECK(v.volume >= v.volume_flat);
}

TEST(region_volume_schwarzschild_shell_matches_radial_oracle) {
  const HoleSet s = schwarzschild();
  Region shell{{Vec3{}, 2.0}, {{Vec3{}, 1.0}}};
  VolumeBudget budget;
  budget.points = 1 << 19;
  const VolumeResult v = region_volume(s, shell, budget);
  const double oracle = 4.0 * M_PI *
                        oracles::integrate(
                            [](double r) {
                              const double f = 1.0 + 0.5 / r;
                              return std::pow(f, 6) * r * r;
                            },
                            1.0, 2.0, 1e-13);
  CHECK_NEAR(v.volume, oracle, std::max(5.0 * v.error, 2e-3 * oracle));
}

TEST(region_volume_errors) {
  const HoleSet s = schwarzschild();
  CHECK_THROWS(ErrorCode::DivergentVolume, region_volume(s, Region{{Vec3{}, 1.0}, {}}, {}));

  Region covered{{Vec3{}, 1.0}, {{Vec3{}, 1.5}}};
  covered.excluded[0].center = {0, 0, 0};
  VolumeBudget small;
  small.points = 4096;
  CHECK_THROWS(ErrorCode::EmptyRegion, region_volume(s, covered, small));
}

TEST(shell_volume_stratification_consistent_with_qmc) {
  // g-volume of a thin annulus around a hole: product quadrature against QMC.
  const HoleSet s = two_hole_asym();
  const double v1 = shell_g_volume(s, {0, 0, 0}, 0.05, 0.5);
  Region annulus{{Vec3{0, 0, 0}, 0.5}, {{Vec3{0, 0, 0}, 0.05}}};
  VolumeBudget budget;
  budget.points = 1 << 19;
  const VolumeResult v2 = region_volume(s, annulus, budget);
  CHECK_NEAR(v1, v2.volume, std::max(6.0 * v2.error, 2e-3 * v1));
}

TEST(distance_upper_flat_pairs) {
  const HoleSet s = schwarzschild(1e-5, {30, 0, 0});
  DistanceOptions opt;
  opt.nodes = 40;
  const DistanceResult d = distance_upper(s, {0, 0, 0}, {1, 2, 2}, {}, opt);
  CHECK(d.upper >= d.flat);
  CHECK_REL(d.upper, 3.0, 1e-2);
}

TEST(distance_upper_schwarzschild_radial_oracle) {
  const HoleSet s = schwarzschild();
  // int_{1/2}^{2} (1 + 1/(2 rho))^2 drho = 1.5 + ln 4 + 0.375.
  const double oracle = 1.5 + std::log(4.0) + 0.375;
  const DistanceResult d = distance_upper(s, {0.5, 0, 0}, {2, 0, 0});
  CHECK(d.upper >= d.flat);
  CHECK_REL(d.upper, oracle, 1e-2);
  CHECK(d.upper >= oracle * (1.0 - 1e-9));  // the radial segment is the geodesic
}

TEST(distance_upper_detours_and_symmetry) {
  const HoleSet s = two_hole_asym();
  std::vector<Ball> balls = {{{0, 0, 0}, 0.3}, {{1.5, 0, 0}, 0.3}};
  const Vec3 x = {-1, 0.05, 0}, y = {2.5, -0.05, 0};
  const DistanceResult fwd = distance_upper(s, x, y, balls);
  const DistanceResult bwd = distance_upper(s, y, x, balls);
  CHECK(fwd.upper >= norm(x - y));
  CHECK_REL(fwd.upper, bwd.upper, 5e-3);
  // The straight chord threads both balls; the path must clear them.
  for (const auto& p : fwd.path)
    for (const auto& b : balls) CHECK(norm(p - b.center) >= b.radius * (1.0 - 1e-9));

  CHECK_THROWS(ErrorCode::Unreachable, distance_upper(s, {0, 0, 0.1}, y, balls));
}

TEST(annulus_pullback_accepts_and_rejects_scales) {
  HoleSet tiny;
  tiny.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  tiny.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  const AnnulusMetric am = annulus_pullback(tiny, 0, 0.5);
  CHECK(am.factor_at_least_one);
  CHECK(am.k1 >= 1.0);
  CHECK(am.k2 >= am.k1);
  CHECK(am.k1_inner >= am.k1);
  CHECK(am.k2_inner <= am.k2);

  CHECK_THROWS(ErrorCode::ScaleViolatesSeparation, annulus_pullback(tiny, 0, 1.0));
}

TEST(annulus_ratio_tightens_as_masses_shrink) {
  double prev_ratio = std::numeric_limits<double>::infinity();
  for (double a = 1e-3; a >= 1e-6; a /= 10.0) {
    HoleSet s;
    s.holes.push_back({{-2, 0, 0}, a, a});
    s.holes.push_back({{2, 0, 0}, a, a});
    const AnnulusMetric am = annulus_pullback(s, 0, 0.5);
    const double ratio = am.k2 / am.k1;
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }
  CHECK(prev_ratio < 1.0 + 1e-4);
}

int main() { return testing::run_all("geom"); }
