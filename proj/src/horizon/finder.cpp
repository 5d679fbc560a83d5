#include "geostat/horizon/finder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "geostat/core/masses.hpp"
#include "geostat/error.hpp"
#include "geostat/geom/area.hpp"
#include "geostat/horizon/residual.hpp"

namespace geostat {

namespace {

HoleSet rescaled(const HoleSet& holes, const Vec3& center, double scale) {
  HoleSet out;
  out.strict_beta = holes.strict_beta;
  out.holes.reserve(holes.holes.size());
  for (const Hole& h : holes.holes)
    out.holes.push_back({(h.p - center) / scale, h.alpha / scale, h.beta / scale});
  return out;
}

// Area-mean residual of the round sphere of radius rho about the origin of
// the rescaled configuration.
double sphere_mean_residual(const HoleSet& scaled_holes, const SphereGrid& grid, double rho) {
  RadialSurface s;
  s.center = {};
  s.grid = SphereGrid::get(grid.ntheta(), grid.nphi(), grid.lmax());
  s.r.assign(grid.size(), rho);
  const auto resid = mc_residual(scaled_holes, s);
  double sum = 0.0;
  for (int j = 0; j < grid.ntheta(); ++j) {
    double row = 0.0;
    for (int k = 0; k < grid.nphi(); ++k) row += resid[grid.idx(j, k)];
    sum += row * grid.weight_u(j);
  }
  return sum * grid.dphi() / (4.0 * M_PI);
}

}  // namespace

const char* find_status_name(FindStatus status) {
  switch (status) {
    case FindStatus::Converged: return "converged";
    case FindStatus::CollapseTowardHole: return "collapse-toward-hole";
    case FindStatus::NoConvergence: return "no-convergence";
  }
  return "?";
}

FindOutcome find_horizon(const HoleSet& holes, const Vec3& center, double init_radius,
                         const FinderOptions& options, const Constants* constants) {
  FindOutcome outcome;
  if (!(init_radius > 0.0)) throw Error(ErrorCode::NonPositiveInput, "init_radius must be positive");

  const double scale = init_radius / 2.0;
  const HoleSet scaled = rescaled(holes, center, scale);
  const auto grid = SphereGrid::get(options.ntheta, options.nphi, std::max(options.lmax, 2));
  const double floor_r = options.collapse_floor * 2.0;

  // Stage A: locate the outermost zero of the round-sphere mean residual by
  // marching inward from the large initial sphere, then bisecting.
  double hi = 2.0, lo = -1.0;
  double f_hi = sphere_mean_residual(scaled, *grid, hi);
  if (f_hi <= 0.0) {
    // Initial sphere already inside; march outward to bracket from above.
    double rho = hi;
    for (int i = 0; i < 400 && rho < 200.0; ++i) {
      const double next = rho / 0.94;
      const double f = sphere_mean_residual(scaled, *grid, next);
      if (f > 0.0) {
        lo = rho;
        hi = next;
        break;
      }
      rho = next;
    }
    if (lo < 0.0) {
      outcome.status = FindStatus::NoConvergence;
      outcome.note = "no expanding sphere with positive mean residual found";
      return outcome;
    }
  } else {
    double rho = hi;
    while (rho > floor_r) {
      const double next = rho * 0.94;
      const double f = sphere_mean_residual(scaled, *grid, next);
      if (f <= 0.0) {
        lo = next;
        hi = rho;
        break;
      }
      rho = next;
    }
    if (lo < 0.0) {
      outcome.status = FindStatus::CollapseTowardHole;
      std::ostringstream note;
      note << "round-sphere residual stayed positive down to r = " << rho * scale
           << "; no horizon from this start";
      outcome.note = note.str();
      return outcome;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sphere_mean_residual(scaled, *grid, mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double rho0 = 0.5 * (lo + hi);

  // Stage B: spectral fast flow.  The update projects the normal-speed field
  // onto spherical harmonics with the gain A / (1 + B l (l+1)) per mode.
  const int L = std::min(options.lmax, grid->lmax());
  const double alpha_flow = 1.0;
  const double beta_flow = 0.5;
  const double A_flow = alpha_flow / (L * (L + 1.0)) + beta_flow;
  const double B_flow = beta_flow / alpha_flow;

  RadialSurface surf;
  surf.center = {};
  surf.grid = grid;
  surf.r.assign(grid->size(), rho0);
  SphereGrid::Spectral coef = grid->analyze(surf.r, L);
  SphereGrid::Spectral prev_coef = coef;

  double gain = 1.0;
  double prev_max = std::numeric_limits<double>::infinity();
  int iter = 0;
  bool converged = false;
  std::vector<double> speed(grid->size());

  for (; iter < options.max_iterations; ++iter) {
    grid->synthesize(coef, surf.r);
    const double rbar = surf.mean_radius();
    if (rbar < floor_r || surf.min_radius() <= 0.0) {
      outcome.status = FindStatus::CollapseTowardHole;
      outcome.note = "flow collapsed below the radius floor";
      return outcome;
    }

    SurfaceGeometry geo;
    std::vector<double> resid;
    try {
      geo = surface_geometry(surf);
      resid = mc_residual(scaled, geo);
    } catch (const Error&) {
      outcome.status = FindStatus::NoConvergence;
      outcome.note = "graph degenerated during the flow";
      return outcome;
    }
    double rmax = 0.0;
    for (double v : resid) rmax = std::max(rmax, std::abs(v));

    if (options.verbose) {
      std::fprintf(stderr, "  iter %4d  rbar %.6e  resid %.3e  gain %.2e\n", iter, rbar, rmax,
                   gain);
    }

    // Residuals carry 1/length; measure them against the local curvature
    // scale 2/rbar so the criterion is radius-relative.
    if (rmax * rbar / 2.0 < options.tol) {
      converged = true;
      break;
    }

    if (rmax > prev_max * (1.0 + 1e-12)) {
      // Residual went up: halve the damping and retry from the previous state.
      gain *= 0.5;
      coef = prev_coef;
      if (gain < 1e-8) break;
      continue;
    }
    prev_max = rmax;
    prev_coef = coef;
    gain = std::min(1.0, gain * 1.2);

    // Radial speed of the normal flow: dr = -resid * (n . e_r)^{-1} = -resid * W / r.
    for (int j = 0; j < grid->ntheta(); ++j)
      for (int k = 0; k < grid->nphi(); ++k) {
        const int i = grid->idx(j, k);
        const Vec3 n = {geo.nx[i], geo.ny[i], geo.nz[i]};
        const double ndotr = std::max(0.2, dot(n, grid->dir(j, k)));
        speed[i] = resid[i] / ndotr;
      }
    const SphereGrid::Spectral upd = grid->analyze(speed, L);
    const double scale2 = gain * rbar * rbar;
    for (int l = 0; l <= L; ++l) {
      const double fl = scale2 * A_flow / (1.0 + B_flow * l * (l + 1.0));
      for (int m = 0; m <= l; ++m) {
        coef.c[plm_index(l, m)] -= fl * upd.c[plm_index(l, m)];
        if (m > 0) coef.s[plm_index(l, m)] -= fl * upd.s[plm_index(l, m)];
      }
    }
  }

  if (!converged) {
    outcome.status = FindStatus::NoConvergence;
    std::ostringstream note;
    note << "residual " << prev_max << " above tol " << options.tol << " after " << iter
         << " iterations";
    outcome.note = note.str();
    return outcome;
  }

  // Back to physical coordinates.
  HorizonResult res;
  res.surface.center = center;
  res.surface.grid = grid;
  res.surface.r.resize(grid->size());
  for (int i = 0; i < grid->size(); ++i) res.surface.r[i] = scale * surf.r[i];
  res.iterations = iter;
  res.mean_radius = scale * surf.mean_radius();

  const auto resid_phys = mc_residual(holes, res.surface);
  for (double v : resid_phys) res.residual_max = std::max(res.residual_max, std::abs(v));

  const AreaResult area = surface_area(holes, res.surface);
  res.area_g = area.area;
  res.area_error = area.error;

  for (int i = 0; i < holes.size(); ++i)
    if (res.surface.encloses(holes[i].p)) res.enclosed_holes.push_back(i);
  for (int i : res.enclosed_holes)
    if (norm(holes[i].p - center) < hole_coincidence_tolerance(holes[i].p)) res.center_hole = i;

  if (constants && constants->C1 > 0.0) {
    int j = res.center_hole;
    if (j < 0 && !res.enclosed_holes.empty()) {
      // Nearest enclosed hole to the center.
      j = res.enclosed_holes.front();
      for (int cand : res.enclosed_holes)
        if (norm(holes[cand].p - center) < norm(holes[j].p - center)) j = cand;
    }
    if (j >= 0) {
      const Hole& h = holes[j];
      res.annulus_hole = j;
      res.annulus_inner = h.alpha * h.beta / (4.0 * constants->C1 * h.mass_parameter());
      res.annulus_outer = 2.0 * constants->C1 * std::sqrt(res.area_g / M_PI);
    }
  }

  outcome.status = FindStatus::Converged;
  outcome.result = std::move(res);
  return outcome;
}

OutermostResult find_outermost(const HoleSet& holes, const FinderOptions& options,
                               const Constants* constants) {
  if (!holes.strict_beta)
    throw Error(ErrorCode::HypothesisViolated,
                "find_outermost requires strict Brill-Lindquist data (every beta > 0)");

  OutermostResult out;
  const int n = holes.size();
  const auto sep = try_separation(holes);

  std::vector<double> mi(n);
  for (int i = 0; i < n; ++i) mi[i] = end_mass(holes, i);

  auto log_attempt = [&out](const std::string& what, const FindOutcome& o) {
    std::ostringstream os;
    os << what << ": " << find_status_name(o.status);
    if (!o.note.empty()) os << " (" << o.note << ")";
    out.attempts.push_back(os.str());
  };

  // Per-hole searches.
  std::vector<FindOutcome> per_hole(n);
  for (int i = 0; i < n; ++i) {
    double init = 4.0 * mi[i];
    if (n >= 2 && sep) init = std::min(init, 0.25 * sep->sigma_i[i]);
    std::ostringstream what;
    what << "hole " << i << " (init " << init << ")";
    per_hole[i] = find_horizon(holes, holes[i].p, init, options, constants);
    log_attempt(what.str(), per_hole[i]);
  }

  // Cluster searches: union-find over pairs closer than the summed trial radii.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (norm(holes[i].p - holes[j].p) < 2.0 * (mi[i] + mi[j])) parent[find(i)] = find(j);

  std::vector<std::vector<int>> clusters(n);
  for (int i = 0; i < n; ++i) clusters[find(i)].push_back(i);

  std::vector<FindOutcome> merged_results;
  for (const auto& members : clusters) {
    if (members.size() < 2) continue;
    Vec3 centroid;
    double msum = 0.0;
    for (int i : members) {
      centroid += holes[i].p;
      msum += mi[i];
    }
    centroid = centroid / static_cast<double>(members.size());
    double spread = 0.0;
    for (int i : members) spread = std::max(spread, norm(holes[i].p - centroid));
    const double init = 2.0 * (spread + 2.0 * msum);
    std::ostringstream what;
    what << "cluster of " << members.size() << " holes (init " << init << ")";
    FindOutcome o = find_horizon(holes, centroid, init, options, constants);
    log_attempt(what.str(), o);
    if (o.status == FindStatus::Converged) merged_results.push_back(std::move(o));
  }

  // Cluster surfaces that enclose several holes supersede the per-hole ones.
  std::vector<bool> swallowed(n, false);
  for (auto& o : merged_results) {
    if (o.result.enclosed_holes.size() >= 2) {
      for (int i : o.result.enclosed_holes) swallowed[i] = true;
      out.horizons.push_back(std::move(o.result));
      out.merged = true;
    } else if (o.result.enclosed_holes.empty()) {
      out.no_hole_surfaces.push_back(std::move(o.result));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (swallowed[i]) continue;
    if (per_hole[i].status == FindStatus::Converged)
      out.horizons.push_back(std::move(per_hole[i].result));
  }
  return out;
}

}  // namespace geostat
