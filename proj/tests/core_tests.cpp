#include <algorithm>
#include <cmath>
#include <limits>

#include "geostat/core/conformal.hpp"
#include "geostat/core/hole_set.hpp"
#include "geostat/core/masses.hpp"
#include "geostat/util/rng.hpp"
#include "harness.hpp"

using namespace geostat;

namespace {

HoleSet schwarzschild(double m = 1.0, const Vec3& p = {}) {
  HoleSet s;
  s.holes.push_back({p, m / 2.0, m / 2.0});
  return s;
}

HoleSet two_hole_example() {
  // alpha = (0.1, 0.2), beta = (0.3, 0.4), r12 = 1.
  HoleSet s;
  s.holes.push_back({{0, 0, 0}, 0.1, 0.3});
  s.holes.push_back({{1, 0, 0}, 0.2, 0.4});
  return s;
}

HoleSet random_strict(Rng& rng, int n, double mass_scale = 1.0) {
  HoleSet s;
  for (int i = 0; i < n; ++i) {
    Vec3 p;
    for (;;) {
      p = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      bool ok = norm(p) > 0.5;
      for (const Hole& h : s.holes) ok = ok && norm(p - h.p) > 0.5;
      if (ok) break;
    }
    s.holes.push_back({p, mass_scale * rng.uniform(0.05, 0.5), mass_scale * rng.uniform(0.05, 0.5)});
  }
  return s;
}

}  // namespace

TEST(validate_accepts_good_set) {
  HoleSet s;
  s.holes.push_back({{1, 0, 0}, 0.5, 0.5});
  CHECK(validate(s).ok());
}

TEST(validate_rejects_duplicates_and_lists_all_issues) {
  HoleSet s;
  s.holes.push_back({{0, 0, 0}, 0.5, 0.5});
  s.holes.push_back({{0, 0, 0}, -1.0, 0.5});
  const auto r = validate(s);
  CHECK(!r.ok());
  bool dup = false, alpha = false;
  for (const auto& issue : r.issues) {
    dup = dup || issue.code == ErrorCode::DuplicatePosition;
    alpha = alpha || issue.code == ErrorCode::NonPositiveAlpha;
  }
  CHECK(dup);
  CHECK(alpha);
}

TEST(validate_rejects_zero_beta_under_strict_flag) {
  HoleSet s;
  s.strict_beta = true;
  s.holes.push_back({{1, 0, 0}, 0.5, 0.0});
  CHECK(!validate(s).ok());
  s.strict_beta = false;
  CHECK(validate(s).ok());  // extreme Reissner-Nordstrom data is allowed
}

TEST(validate_rejects_non_finite_entries) {
  HoleSet s;
  s.holes.push_back({{std::numeric_limits<double>::quiet_NaN(), 0, 0}, 0.5, 0.5});
  const auto r = validate(s);
  CHECK(!r.ok());
  CHECK(r.issues.front().code == ErrorCode::BadConfig);
}

TEST(validate_rejects_empty_set) {
  HoleSet s;
  const auto r = validate(s);
  CHECK(!r.ok());
  CHECK(r.issues.front().code == ErrorCode::EmptyHoleSet);
}

TEST(conformal_schwarzschild_values) {
  const HoleSet s = schwarzschild();
  const ConformalJet jet = conformal_eval(s, {0.5, 0, 0}, 2);
  CHECK_REL(jet.chi, 2.0, 1e-15);
  CHECK_REL(jet.psi, 2.0, 1e-15);
  CHECK_REL(jet.Psi, 4.0, 1e-15);
  // dPsi/drho = -8/m at rho = m/2.
  CHECK_REL(norm(jet.grad_Psi), 8.0, 1e-14);
  CHECK_REL(jet.grad_Psi.x, -8.0, 1e-14);
}

TEST(conformal_asymptotic_flatness_monotone) {
  Rng rng(5);
  const HoleSet s = random_strict(rng, 3);
  double prev = std::numeric_limits<double>::infinity();
  for (double r = 8.0; r < 4000.0; r *= 2.0) {
    const double psi = conformal_eval(s, {r, 0.1 * r, -0.2 * r}, 0).Psi;
    CHECK(psi > 1.0);
    CHECK(psi < prev);
    prev = psi;
  }
  CHECK(prev < 1.01);
}

TEST(conformal_rejects_evaluation_at_hole) {
  const HoleSet s = schwarzschild();
  CHECK_THROWS(ErrorCode::EvaluationAtHole, conformal_eval(s, {0, 0, 0}, 0));
  CHECK_THROWS(ErrorCode::EvaluationAtHole, conformal_eval(s, {1e-14, 0, 0}, 0));
}

TEST(conformal_product_rule_identity_exact) {
  Rng rng(7);
  const HoleSet s = random_strict(rng, 4);
  for (int i = 0; i < 50; ++i) {
    Vec3 x = {rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(-8, 8)};
    if (nearest_hole(s, x).distance < 1e-3) continue;
    const ConformalJet jet = conformal_eval(s, x, 1);
    const Vec3 expect = jet.psi * jet.grad_chi + jet.chi * jet.grad_psi;
    CHECK(norm(jet.grad_Psi - expect) == 0.0);  // same expression by construction
    CHECK(jet.chi > 1.0);
    CHECK(jet.psi > 1.0);
  }
}

TEST(conformal_gradients_match_finite_differences) {
  Rng rng(11);
  const HoleSet s = random_strict(rng, 3);
  for (int i = 0; i < 25; ++i) {
    Vec3 x = {rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)};
    const double d = nearest_hole(s, x).distance;
    if (d < 1e-2) continue;
    const double h = 1e-5 * d;
    const ConformalJet jet = conformal_eval(s, x, 1);
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 e;
      e[axis] = h;
      const double dchi =
          (conformal_eval(s, x + e, 0).chi - conformal_eval(s, x - e, 0).chi) / (2 * h);
      const double dpsi =
          (conformal_eval(s, x + e, 0).psi - conformal_eval(s, x - e, 0).psi) / (2 * h);
      CHECK_REL(jet.grad_chi[axis], dchi, 1e-6);
      CHECK_REL(jet.grad_psi[axis], dpsi, 1e-6);
    }
  }
}

TEST(adm_mass_direct_sum) {
  HoleSet s;
  s.holes.push_back({{1, 0, 0}, 0.1, 0.3});
  s.holes.push_back({{0, 1, 0}, 0.2, 0.4});
  CHECK_REL(adm_mass(s), 1.0, 1e-15);
  CHECK_REL(adm_mass(schwarzschild()), 1.0, 1e-15);
}

TEST(end_mass_cases) {
  CHECK_REL(end_mass(schwarzschild(), 0), 1.0, 1e-15);

  // Two symmetric holes: m_1 = 2a + 2a^2/r.
  HoleSet sym;
  sym.holes.push_back({{0, 0, 0}, 0.3, 0.3});
  sym.holes.push_back({{2, 0, 0}, 0.3, 0.3});
  CHECK_REL(end_mass(sym, 0), 0.6 + 2 * 0.09 / 2.0, 1e-15);

  // Tiny masses at (+-2, 0, 0): m_1 = 1e-5 + 1.25e-11.
  HoleSet tiny;
  tiny.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  tiny.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  CHECK_REL(end_mass(tiny, 0), 1e-5 + 1.25e-11, 1e-14);

  CHECK_THROWS(ErrorCode::IndexOutOfRange, end_mass(tiny, 2));
}

TEST(end_charge_cases) {
  // Symmetric weights kill every charge.
  HoleSet sym;
  sym.holes.push_back({{0, 0, 0}, 0.3, 0.3});
  sym.holes.push_back({{2, 0, 0}, 0.4, 0.4});
  CHECK_NEAR(end_charge(sym, 0), 0.0, 1e-16);
  CHECK_NEAR(end_charge(sym, 1), 0.0, 1e-16);

  HoleSet single;
  single.holes.push_back({{1, 0, 0}, 0.2, 0.5});
  CHECK_REL(end_charge(single, 0), 0.3, 1e-15);

  CHECK_REL(end_charge(two_hole_example(), 0), 0.22, 1e-15);
}

TEST(charge_antisymmetry_under_weight_swap) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const HoleSet s = random_strict(rng, 3);
    HoleSet swapped = s;
    for (Hole& h : swapped.holes) std::swap(h.alpha, h.beta);
    for (int i = 0; i < s.size(); ++i) {
      CHECK_REL(end_charge(s, i), -end_charge(swapped, i), 1e-13);
      CHECK_REL(end_mass(s, i), end_mass(swapped, i), 1e-14);
    }
  }
}

TEST(separation_two_holes) {
  HoleSet s;
  s.holes.push_back({{-2, 0, 0}, 0.1, 0.1});
  s.holes.push_back({{2, 0, 0}, 0.1, 0.1});
  const SeparationData sep = separation(s);
  CHECK_REL(sep.sigma_i[0], 4.0, 1e-15);
  CHECK_REL(sep.sigma_i[1], 4.0, 1e-15);
  CHECK_REL(sep.sigma_i_out[0], 4.0, 1e-15);
  CHECK_REL(sep.base_distances[0], 2.0, 1e-15);
  CHECK_REL(sep.sigma, 2.0, 1e-15);
}

TEST(separation_three_collinear) {
  HoleSet s;
  s.holes.push_back({{1, 0, 0}, 0.1, 0.1});
  s.holes.push_back({{2, 0, 0}, 0.1, 0.1});
  s.holes.push_back({{4, 0, 0}, 0.1, 0.1});
  CHECK_REL(separation(s).sigma, 1.0, 1e-15);
}

TEST(separation_single_hole_and_origin_error) {
  HoleSet s;
  s.holes.push_back({{0, 3, 0}, 0.1, 0.1});
  const SeparationData sep = separation(s);
  CHECK(sep.sigma_i.empty());
  CHECK_REL(sep.sigma, 3.0, 1e-15);

  CHECK_THROWS(ErrorCode::HoleAtOrigin, separation(schwarzschild()));
  CHECK(!try_separation(schwarzschild()).has_value());
}

TEST(separation_sigma_i_below_sigma_i_out) {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const HoleSet s = random_strict(rng, 4);
    const auto sep = try_separation(s);
    if (!sep) continue;
    for (int i = 0; i < s.size(); ++i) CHECK(sep->sigma_i[i] <= sep->sigma_i_out[i]);
  }
}

TEST(positive_mass_certificate_cases) {
  const auto cert = positive_mass_certificate(schwarzschild());
  CHECK(cert.pass);
  CHECK_REL(cert.mass, 1.0, 1e-15);
  CHECK(cert.decomposition.size() == 1);
  CHECK_REL(cert.decomposition[0].first, 0.5, 1e-15);

  HoleSet tiny;
  tiny.holes.push_back({{-2, 0, 0}, 5e-6, 5e-6});
  tiny.holes.push_back({{2, 0, 0}, 5e-6, 5e-6});
  const auto cert2 = positive_mass_certificate(tiny);
  CHECK(cert2.pass);
  CHECK_REL(cert2.mass, 2e-5, 1e-14);
}

TEST(end_mass_small_mass_doubling_bound) {
  // With m < sigma every end mass stays below 2 (alpha_i + beta_i).
  Rng rng(19);
  int checked = 0;
  while (checked < 20) {
    const HoleSet s = random_strict(rng, 3, 0.05);
    const auto sep = try_separation(s);
    if (!sep || adm_mass(s) >= sep->sigma) continue;
    ++checked;
    for (int i = 0; i < s.size(); ++i) {
      const double mi = end_mass(s, i);
      CHECK(mi >= s[i].mass_parameter());
      CHECK(mi < 2.0 * s[i].mass_parameter());
    }
  }
}

TEST(psi_strictly_above_one_everywhere_sampled) {
  Rng rng(23);
  const HoleSet s = random_strict(rng, 4);
  for (int i = 0; i < 200; ++i) {
    const Vec3 x = {rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
    if (nearest_hole(s, x).distance < 1e-6) continue;
    CHECK(conformal_eval(s, x, 0).Psi > 1.0);
  }
}

int main() { return testing::run_all("core"); }
