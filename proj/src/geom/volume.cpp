#include "geostat/geom/volume.hpp"

#include <cmath>
#include <sstream>

#include "geostat/error.hpp"
#include "geostat/geom/sphere_grid.hpp"
#include "geostat/kern/batch.hpp"
#include "geostat/util/legendre.hpp"
#include "geostat/util/parallel.hpp"
#include "geostat/util/sobol.hpp"

namespace geostat {

std::vector<RegionIssue> check_region(const Region& region) {
  std::vector<RegionIssue> issues;
  const auto& ex = region.excluded;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (norm(ex[i].center - region.outer.center) + ex[i].radius >
        region.outer.radius * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "excluded ball " << i << " not contained in the outer ball";
      issues.push_back({os.str()});
    }
    for (std::size_t j = i + 1; j < ex.size(); ++j) {
      if (norm(ex[i].center - ex[j].center) < ex[i].radius + ex[j].radius) {
        std::ostringstream os;
        os << "excluded balls " << i << " and " << j << " overlap";
        issues.push_back({os.str()});
      }
    }
  }
  return issues;
}

namespace {

bool inside_any(const std::vector<Ball>& balls, const Vec3& x) {
  for (const Ball& b : balls)
    if (norm2(x - b.center) < b.radius * b.radius) return true;
  return false;
}

double shell_g_volume_panels(const kern::HoleSoA& soa, const Vec3& center, double r0, double r1,
                             int panels_per_decade) {
  const auto grid = SphereGrid::get(16, 32, 8);
  const int ndir = grid->size();
  std::vector<double> px(ndir), py(ndir), pz(ndir), chi(ndir), psi(ndir);
  kern::JetOut out;
  out.chi = chi.data();
  out.psi = psi.data();

  auto angular_avg_psi3 = [&](double r) {
    for (int j = 0; j < grid->ntheta(); ++j)
      for (int k = 0; k < grid->nphi(); ++k) {
        const int i = grid->idx(j, k);
        const Vec3 p = center + r * grid->dir(j, k);
        px[i] = p.x;
        py[i] = p.y;
        pz[i] = p.z;
      }
    kern::eval_batch(soa, px.data(), py.data(), pz.data(), ndir, out);
    double sum = 0.0;
    for (int j = 0; j < grid->ntheta(); ++j) {
      double row = 0.0;
      for (int k = 0; k < grid->nphi(); ++k) {
        const int i = grid->idx(j, k);
        const double f = chi[i] * psi[i];
        row += f * f * f;
      }
      sum += row * grid->weight_u(j);
    }
    return sum * grid->dphi();  // integral over the unit sphere
  };

  // Log-radial substitution: V = int psi3bar(r) r^3 dt, t = ln r.
  const double t0 = std::log(r0), t1 = std::log(r1);
  const int decades = std::max(1, static_cast<int>(std::ceil((t1 - t0) / std::log(10.0))));
  const int npanels = std::max(4, decades * panels_per_decade);
  static const GaussLegendre gl8 = gauss_legendre(8);
  double total = 0.0;
  for (int p = 0; p < npanels; ++p) {
    const double a = t0 + (t1 - t0) * p / npanels;
    const double b = t0 + (t1 - t0) * (p + 1) / npanels;
    double panel = 0.0;
    for (int q = 0; q < 8; ++q) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * gl8.x[q];
      const double r = std::exp(t);
      panel += gl8.w[q] * angular_avg_psi3(r) * r * r * r;
    }
    total += panel * 0.5 * (b - a);
  }
  return total;
}

}  // namespace

double shell_g_volume(const HoleSet& holes, const Vec3& center, double r0, double r1,
                      double* error_out) {
  if (!(r1 > r0) || !(r0 > 0.0)) {
    if (r1 <= r0) {
      if (error_out) *error_out = 0.0;
      return 0.0;
    }
    throw Error(ErrorCode::DivergentVolume, "shell reaches the puncture");
  }
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  const double coarse = shell_g_volume_panels(soa, center, r0, r1, 4);
  const double fine = shell_g_volume_panels(soa, center, r0, r1, 8);
  if (error_out) *error_out = std::abs(fine - coarse);
  return fine;
}

double sphere_g_area(const HoleSet& holes, const Vec3& center, double r) {
  const auto grid = SphereGrid::get(32, 64, 8);
  const int n = grid->size();
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  std::vector<double> px(n), py(n), pz(n), chi(n), psi(n);
  for (int j = 0; j < grid->ntheta(); ++j)
    for (int k = 0; k < grid->nphi(); ++k) {
      const int i = grid->idx(j, k);
      const Vec3 p = center + r * grid->dir(j, k);
      px[i] = p.x;
      py[i] = p.y;
      pz[i] = p.z;
    }
  kern::JetOut out;
  out.chi = chi.data();
  out.psi = psi.data();
  kern::eval_batch(soa, px.data(), py.data(), pz.data(), n, out);
  std::vector<double> f2(n);
  for (int i = 0; i < n; ++i) {
    const double f = chi[i] * psi[i];
    f2[i] = f * f;
  }
  return r * r * grid->integrate(f2);
}

VolumeResult region_volume(const HoleSet& holes, const Region& region,
                           const VolumeBudget& budget) {
  VolumeResult result;
  result.issues = check_region(region);

  // A hole interior to the integration domain makes the g-volume infinite
  // (it opens into another end).
  for (int i = 0; i < holes.size(); ++i) {
    const Vec3& p = holes[i].p;
    const bool in_outer =
        norm(p - region.outer.center) < region.outer.radius - hole_coincidence_tolerance(p);
    if (in_outer && !inside_any(region.excluded, p)) {
      std::ostringstream os;
      os << "hole " << i << " lies inside the region; Vol_g diverges";
      throw Error(ErrorCode::DivergentVolume, os.str());
    }
  }

  // Per-hole shell stratification: holes hidden behind a tiny excluded ball
  // contribute a radially singular integrand; integrate an annulus around
  // them by product quadrature and exclude it from the QMC domain.
  struct Strat {
    int hole = -1;
    double r_in = 0.0, r_out = 0.0;
  };
  std::vector<Strat> strata;
  std::vector<Ball> qmc_excluded = region.excluded;
  for (int i = 0; i < holes.size(); ++i) {
    const Vec3& p = holes[i].p;
    int host = -1;
    for (std::size_t e = 0; e < region.excluded.size(); ++e) {
      const Ball& b = region.excluded[e];
      if (norm(p - b.center) < 0.05 * b.radius &&
          norm(p - b.center) + 1e-14 < b.radius) {
        host = static_cast<int>(e);
        break;
      }
    }
    if (host < 0) continue;
    const Ball& b = region.excluded[host];
    double safe = 0.9 * (region.outer.radius - norm(p - region.outer.center));
    for (std::size_t e = 0; e < region.excluded.size(); ++e) {
      if (static_cast<int>(e) == host) continue;
      safe = std::min(safe, 0.9 * (norm(p - region.excluded[e].center) - region.excluded[e].radius));
    }
    for (int jh = 0; jh < holes.size(); ++jh)
      if (jh != i) safe = std::min(safe, 0.45 * norm(p - holes[jh].p));
    const double want = std::max(4.0 * holes[i].mass_parameter(), 4.0 * b.radius);
    const double r_out = std::min(want, safe);
    if (r_out > 2.0 * b.radius) {
      strata.push_back({i, b.radius, r_out});
      qmc_excluded[host].center = p;
      qmc_excluded[host].radius = r_out;
      ++result.stratified_holes;
    }
  }

  // An excluded ball concentric with the outer one turns the domain into a
  // shell; sample the radius directly there instead of rejecting (thin
  // shells would otherwise starve the sampler).
  double q_inner = 0.0;
  int concentric = -1;
  for (std::size_t e = 0; e < qmc_excluded.size(); ++e) {
    const Ball& b = qmc_excluded[e];
    if (norm(b.center - region.outer.center) < 1e-12 * region.outer.radius &&
        b.radius < region.outer.radius) {
      const double q = std::pow(b.radius / region.outer.radius, 3);
      if (q > q_inner) {
        q_inner = q;
        concentric = static_cast<int>(e);
      }
    }
  }
  if (concentric >= 0) qmc_excluded.erase(qmc_excluded.begin() + concentric);

  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  const double ball_vol =
      4.0 / 3.0 * M_PI * std::pow(region.outer.radius, 3) * (1.0 - q_inner);
  const int reps = std::max(1, budget.replicates);
  const std::uint64_t per_rep = std::max<std::uint64_t>(budget.points / reps, 1024);

  std::vector<double> rep_g(reps, 0.0), rep_flat(reps, 0.0);
  std::vector<std::uint64_t> rep_accept(reps, 0);

  parallel_for_chunks(reps, [&](std::size_t rep) {
    Sobol3 sobol(budget.seed + 0x9e3779b9ULL * (rep + 1));
    constexpr std::size_t kBlock = 4096;
    std::vector<double> bx(kBlock), by(kBlock), bz(kBlock), chi(kBlock), psi(kBlock);
    kern::JetOut out;
    out.chi = chi.data();
    out.psi = psi.data();
    double acc_g = 0.0, acc_flat = 0.0;
    std::uint64_t accepted = 0, produced = 0;
    while (produced < per_rep) {
      std::size_t fill = 0;
      const std::size_t want = std::min<std::uint64_t>(kBlock, per_rep - produced);
      while (fill < want) {
        const auto u = sobol.next();
        ++produced;
        const double r = region.outer.radius * std::cbrt(q_inner + (1.0 - q_inner) * u[0]);
        const double cz = 2.0 * u[1] - 1.0;
        const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        const double ph = 2.0 * M_PI * u[2];
        const Vec3 x = region.outer.center + Vec3{r * sz * std::cos(ph), r * sz * std::sin(ph), r * cz};
        if (inside_any(qmc_excluded, x)) {
          if (produced >= per_rep) break;
          continue;
        }
        bx[fill] = x.x;
        by[fill] = x.y;
        bz[fill] = x.z;
        ++fill;
        if (produced >= per_rep) break;
      }
      kern::eval_batch(soa, bx.data(), by.data(), bz.data(), fill, out);
      for (std::size_t i = 0; i < fill; ++i) {
        const double f = chi[i] * psi[i];
        acc_g += f * f * f;
        acc_flat += 1.0;
      }
      accepted += fill;
    }
    rep_g[rep] = ball_vol * acc_g / static_cast<double>(per_rep);
    rep_flat[rep] = ball_vol * acc_flat / static_cast<double>(per_rep);
    rep_accept[rep] = accepted;
  });

  double mean_g = 0.0, mean_flat = 0.0;
  std::uint64_t accepted_total = 0;
  for (int r = 0; r < reps; ++r) {
    mean_g += rep_g[r];
    mean_flat += rep_flat[r];
    accepted_total += rep_accept[r];
  }
  mean_g /= reps;
  mean_flat /= reps;
  double var = 0.0;
  for (int r = 0; r < reps; ++r) var += (rep_g[r] - mean_g) * (rep_g[r] - mean_g);
  var = reps > 1 ? var / (reps - 1) : 0.0;

  if (accepted_total == 0 && strata.empty())
    throw Error(ErrorCode::EmptyRegion, "excluded balls cover the outer ball");

  result.volume = mean_g;
  result.volume_flat = mean_flat;
  result.error = std::sqrt(var / std::max(1, reps));
  result.accepted_fraction =
      static_cast<double>(accepted_total) / (static_cast<double>(per_rep) * reps);

  for (const Strat& s : strata) {
    double err = 0.0;
    result.volume += shell_g_volume(holes, holes[s.hole].p, s.r_in, s.r_out, &err);
    result.volume_flat += 4.0 / 3.0 * M_PI * (std::pow(s.r_out, 3) - std::pow(s.r_in, 3));
    result.error += err;
  }
  return result;
}

}  // namespace geostat
