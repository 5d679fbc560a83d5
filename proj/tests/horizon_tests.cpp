#include <cmath>

#include "geostat/core/masses.hpp"
#include "geostat/geom/area.hpp"
#include "geostat/horizon/checks.hpp"
#include "geostat/horizon/constants.hpp"
#include "geostat/horizon/finder.hpp"
#include "geostat/horizon/monotonicity.hpp"
#include "geostat/horizon/residual.hpp"
#include "geostat/util/rng.hpp"
#include "harness.hpp"

using namespace geostat;

namespace {

HoleSet schwarzschild(double m = 1.0, const Vec3& p = {}) {
  HoleSet s;
  s.holes.push_back({p, m / 2.0, m / 2.0});
  return s;
}

// Round-sphere residual of Schwarzschild: 2/rho - 2m/(rho^2 + m rho / 2).
double schwarzschild_sphere_residual(double m, double rho) {
  return 2.0 / rho - 2.0 * m / (rho * rho + 0.5 * m * rho);
}

}  // namespace

TEST(constants_formulas) {
  // i0 >= 1/3 and kappa <= 9 pin s0 at the 1/6 branch.
  const Constants c = constants(9.0, 1.0 / 3.0);
  CHECK_REL(c.s0, 1.0 / 6.0, 1e-15);
  CHECK_REL(c.C1, 1.0 + 12.0 * M_E, 1e-15);
  CHECK_NEAR(c.eps0, 0.02373, 2e-5);

  const Constants steep = constants(1e6, 1.0);
  CHECK(steep.s0 < 1e-2);
  CHECK(steep.C1 > 1e3);

  // All three branches tying.
  const Constants tie = constants(9.0, 1.0 / 3.0);
  CHECK_REL(tie.s0, 1.0 / 6.0, 1e-15);

  CHECK_THROWS(ErrorCode::NonPositiveInput, constants(0.0, 1.0));
  CHECK_THROWS(ErrorCode::NonPositiveInput, constants(1.0, -1.0));
}

TEST(mc_residual_schwarzschild_horizon_sphere) {
  const HoleSet s = schwarzschild();
  const RadialSurface sphere = RadialSurface::sphere({}, 0.5, 64, 128);
  const auto resid = mc_residual(s, sphere);
  for (double v : resid) CHECK(std::abs(v) < 1e-10);
}

TEST(mc_residual_signs_match_radial_formula) {
  const HoleSet s = schwarzschild();
  for (double rho : {0.4, 0.6, 2.0}) {
    const RadialSurface sphere = RadialSurface::sphere({}, rho, 32, 64);
    const auto resid = mc_residual(s, sphere);
    const double expect = schwarzschild_sphere_residual(1.0, rho);
    for (double v : resid) CHECK_REL(v, expect, 1e-9);
  }
  CHECK(schwarzschild_sphere_residual(1.0, 0.4) < 0.0);
  CHECK(schwarzschild_sphere_residual(1.0, 0.6) > 0.0);
}

TEST(mc_residual_degenerate_grid_detected) {
  // Radius varying faster than the grid resolves: the graph self-intersects.
  const HoleSet s = schwarzschild();
  RadialSurface wild = RadialSurface::sphere({}, 1.0, 16, 32);
  const SphereGrid& g = *wild.grid;
  for (int j = 0; j < g.ntheta(); ++j)
    for (int k = 0; k < g.nphi(); ++k)
      wild.r[g.idx(j, k)] = 1.0 + 0.999 * ((j + k) % 2 ? 1.0 : -1.0);
  CHECK_THROWS(ErrorCode::DegenerateGrid, mc_residual(s, wild));

  RadialSurface negative = RadialSurface::sphere({}, 1.0, 16, 32);
  negative.r[5] = -0.1;
  CHECK_THROWS(ErrorCode::DegenerateGrid, surface_geometry(negative));
}

TEST(mc_residual_far_sphere_flat) {
  const HoleSet s = schwarzschild(1e-6, {100, 0, 0});
  const RadialSurface sphere = RadialSurface::sphere({}, 1.0, 32, 64);
  const auto resid = mc_residual(s, sphere);
  for (double v : resid) CHECK_REL(v, 2.0, 1e-4);
}

TEST(find_horizon_schwarzschild_exact) {
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  CHECK(outcome.status == FindStatus::Converged);
  const HorizonResult& h = outcome.result;
  CHECK_REL(h.mean_radius, 0.5, 1e-6);
  CHECK_REL(h.surface.min_radius(), 0.5, 1e-6);
  CHECK_REL(h.area_g, 16.0 * M_PI, 1e-6);
  CHECK(h.residual_max < 1e-6);
  CHECK(h.enclosed_holes == std::vector<int>{0});
  CHECK(h.center_hole == 0);
}

TEST(find_horizon_extreme_rn_collapses) {
  HoleSet ern;
  ern.strict_beta = false;
  ern.holes.push_back({{0, 0, 0}, 0.5, 0.0});
  const auto outcome = find_horizon(ern, {}, 2.0);
  CHECK(outcome.status == FindStatus::CollapseTowardHole);
}

TEST(find_horizon_two_tiny_holes_perturbative) {
  HoleSet s;
  s.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  s.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  const double m1 = end_mass(s, 0);
  const auto outcome = find_horizon(s, s[0].p, 4.0 * m1);
  CHECK(outcome.status == FindStatus::Converged);
  CHECK_REL(outcome.result.mean_radius, m1 / 2.0, 5e-6);
  CHECK_REL(outcome.result.area_g, 16.0 * M_PI * m1 * m1, 1e-4);
  CHECK(outcome.result.enclosed_holes == std::vector<int>{0});
}

TEST(find_horizon_stable_under_perturbed_initializer) {
  const HoleSet s = schwarzschild();
  const auto a = find_horizon(s, {}, 2.0);
  const auto b = find_horizon(s, {}, 3.7);
  CHECK(a.status == FindStatus::Converged);
  CHECK(b.status == FindStatus::Converged);
  CHECK_REL(a.result.area_g, b.result.area_g, 1e-4);
}

TEST(find_outermost_small_masses_disjoint) {
  HoleSet s;
  s.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  s.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  const Constants c = constants(9.0, 1.0 / 3.0);
  const auto result = find_outermost(s, {}, &c);
  CHECK(result.horizons.size() == 2);
  CHECK(!result.merged);
  const auto locate = locate_checks(s, result.horizons, c);
  CHECK(locate.gate_applicable);
  CHECK(locate.disjoint_pass);
  CHECK(locate.all_pass);
}

TEST(find_outermost_single_hole) {
  const HoleSet s = schwarzschild(1.0, {3, 0, 0});
  const auto result = find_outermost(s);
  CHECK(result.horizons.size() == 1);
  CHECK_REL(result.horizons[0].area_g, 16.0 * M_PI, 1e-6);
}

TEST(find_outermost_requires_strict_data) {
  HoleSet ern;
  ern.strict_beta = false;
  ern.holes.push_back({{1, 0, 0}, 0.5, 0.0});
  CHECK_THROWS(ErrorCode::HypothesisViolated, find_outermost(ern));
}

TEST(merged_pair_shares_one_surface) {
  // Example-2.4 regime: equal weights 1.0 at separation 0.5.
  HoleSet s;
  s.holes.push_back({{-0.25, 0, 0}, 1.0, 1.0});
  s.holes.push_back({{0.25, 0, 0}, 1.0, 1.0});
  const auto result = find_outermost(s);
  CHECK(result.merged);
  CHECK(result.horizons.size() == 1);
  CHECK(result.horizons[0].enclosed_holes.size() == 2);
  // Residual converged and the Penrose inequality holds for the pair.
  const auto pen = penrose_check(s, result.horizons);
  CHECK(pen.pass);
}

TEST(separated_pair_two_disjoint_surfaces) {
  HoleSet s;
  s.holes.push_back({{-10, 0, 0}, 1.0, 1.0});
  s.holes.push_back({{10, 0, 0}, 1.0, 1.0});
  const auto result = find_outermost(s);
  CHECK(!result.merged);
  CHECK(result.horizons.size() == 2);
  const double gap = norm(result.horizons[0].surface.center - result.horizons[1].surface.center);
  CHECK(result.horizons[0].surface.max_radius() + result.horizons[1].surface.max_radius() < gap);
}

TEST(area_lower_bound_schwarzschild_equality) {
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  const double bound = area_lower_bound(s, outcome.result.surface);
  CHECK_REL(bound, 16.0 * M_PI, 1e-6);
  CHECK(bound <= outcome.result.area_g * (1.0 + 1e-9));
}

TEST(area_lower_bound_strict_for_asymmetric) {
  // Spherically symmetric data saturates the bound, so strictness needs a
  // genuinely aspherical horizon: a neighbour hole tilts |grad Psi| / Psi^2
  // across the surface.
  HoleSet s;
  s.holes.push_back({{0, 0, 0}, 0.4, 0.4});
  s.holes.push_back({{3, 0, 0}, 0.25, 0.25});
  const auto outcome = find_horizon(s, s[0].p, 1.6);
  CHECK(outcome.status == FindStatus::Converged);
  const double bound = area_lower_bound(s, outcome.result.surface);
  CHECK(bound < outcome.result.area_g * (1.0 - 1e-6));
}

TEST(area_lower_bound_meaningless_off_horizon) {
  // On a non-minimal far sphere the quantity exceeds the sphere's own area
  // by orders of magnitude; it only bounds minimal surfaces.
  const HoleSet s = schwarzschild(1e-3, {50, 0, 0});
  const RadialSurface sphere = RadialSurface::sphere({}, 1.0, 16, 32);
  CHECK(area_lower_bound(s, sphere) > 100.0 * 4.0 * M_PI);
}

TEST(penrose_check_schwarzschild_equality) {
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  const auto rep = penrose_check(s, {outcome.result});
  CHECK(rep.pass);
  CHECK_NEAR(rep.slack, 0.0, 1e-6);
  CHECK(rep.pass_mass_below);
  CHECK_REL(rep.mass_below[0].lhs, rep.mass_below[0].rhs, 1e-4);
}

TEST(penrose_two_tiny_holes) {
  HoleSet s;
  s.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  s.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  const auto result = find_outermost(s);
  const auto rep = penrose_check(s, result.horizons);
  CHECK(rep.pass);
  const double m1 = end_mass(s, 0);
  CHECK_REL(rep.rhs, std::sqrt(2.0) * m1, 1e-3);
  CHECK(rep.rhs <= rep.mass);
}

TEST(locate_schwarzschild_annulus_numbers) {
  // Hand radii at C1 = 1 + 12e: inner = 0.25/(4 C1) ~ 1.859e-3 < 0.5.
  const Constants c = constants(9.0, 1.0 / 3.0);
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0, {}, &c);
  CHECK_NEAR(outcome.result.annulus_inner, 0.25 / (4.0 * c.C1), 1e-9);
  CHECK(outcome.result.annulus_inner < 0.5);
  CHECK_REL(outcome.result.annulus_outer, 2.0 * c.C1 * 4.0, 1e-5);
  CHECK(0.5 < outcome.result.annulus_outer);
}

TEST(locate_gate_not_applicable_for_large_mass) {
  const Constants c = constants(9.0, 1.0 / 3.0);
  const HoleSet s = schwarzschild(1.0, {2, 0, 0});  // m = 1 >> sigma/(20 C1)
  const auto found = find_outermost(s, {}, &c);
  const auto rep = locate_checks(s, found.horizons, c);
  CHECK(!rep.gate_applicable);
  // The annulus checks themselves still hold for Schwarzschild.
  for (const auto& checks : rep.per_horizon)
    for (const auto& chk : checks)
      if (chk.name == "avoids-inner-ball" || chk.name == "meets-ball-sqrt(A/4pi)") CHECK(chk.pass);
}

TEST(strip_floor_machinery) {
  const Constants c = constants(9.0, 1.0 / 3.0);
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  // A horizon contained well inside the shells: not applicable.
  const auto na = strip_floor_check(s, outcome.result.surface, {}, 1.0, c);
  CHECK(!na.applicable);
  CHECK(na.pass);
  // Synthetic crossing surface: ellipsoidal graph spanning both shells.
  RadialSurface cross = RadialSurface::sphere({}, 1.0, 32, 64);
  const SphereGrid& g = *cross.grid;
  const double r = 0.04;  // shells at C1 r ~ 1.34 and 2 C1 r ~ 2.69
  for (int j = 0; j < g.ntheta(); ++j)
    for (int k = 0; k < g.nphi(); ++k)
      cross.r[g.idx(j, k)] = 2.0 * c.C1 * r * (0.45 + 0.65 * g.sin_theta(j));
  const auto rep = strip_floor_check(s, cross, {}, r, c);
  CHECK(rep.applicable);
  CHECK(rep.clipped_area > 0.0);
  CHECK(rep.pass);
}

TEST(monotonicity_flat_disk_constant_pi) {
  // Large round sphere far from a negligible hole, kappa = 0: the quantity
  // approaches the Euclidean value pi (up to graph-metric anisotropy).
  const HoleSet s = schwarzschild(1e-10, {500, 0, 0});
  const RadialSurface sphere = RadialSurface::sphere({}, 1.0, 128, 256);
  Constants c;
  c.kappa = 0.0;
  c.i0 = 0.35;  // keep s well below the sphere radius
  MonotonicityOptions opt;
  opt.scale = 1.0;
  opt.tolerance = 5e-2;
  opt.local_bounds = false;
  const auto rep = monotonicity_check(s, sphere, 64, 0, c, opt);
  for (double v : rep.value) CHECK_NEAR(v, M_PI, 5e-2 * M_PI);
  CHECK(rep.floor_pass);
}

TEST(monotonicity_schwarzschild_horizon) {
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  const Constants c = auto_constants(s);
  const auto rep = monotonicity_check(s, outcome.result.surface, 16, 40, c);
  CHECK(rep.nondecreasing);
  CHECK(rep.floor_pass);
  CHECK(rep.s_max > rep.s_min);
}

TEST(monotonicity_range_empty_error) {
  const HoleSet s = schwarzschild();
  const auto outcome = find_horizon(s, {}, 2.0);
  Constants c = auto_constants(s);
  c.i0 = 1e-9;  // admissible interval collapses
  MonotonicityOptions opt;
  opt.local_bounds = false;
  CHECK_THROWS(ErrorCode::RangeEmpty,
               monotonicity_check(s, outcome.result.surface, 16, 0, c, opt));
}

TEST(f_function_max_and_schwarzschild_saturation) {
  // F(rho, beta) = 2 rho beta / (rho + beta)^3 peaks at rho = beta/2.
  const double beta = 0.37;
  auto F = [beta](double rho) { return 2.0 * rho * beta / std::pow(rho + beta, 3); };
  double best_rho = 0.0, best = 0.0;
  for (int i = 1; i < 4000; ++i) {
    const double rho = 2.0 * beta * i / 4000.0;
    if (F(rho) > best) {
      best = F(rho);
      best_rho = rho;
    }
  }
  CHECK_NEAR(best_rho, beta / 2.0, 2.0 * beta / 4000.0 + 1e-12);

  // 16 pi m^2 F(m/2, m/2)^2 = 4 pi exactly.
  const double m = 1.7;
  const double val = 16.0 * M_PI * m * m * std::pow(2.0 * (m / 2) * (m / 2) / std::pow(m, 3), 2);
  CHECK_REL(val, 4.0 * M_PI, 1e-14);
}

int main() { return testing::run_all("horizon"); }
