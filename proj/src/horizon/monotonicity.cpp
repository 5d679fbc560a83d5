#include "geostat/horizon/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "geostat/core/conformal.hpp"
#include "geostat/error.hpp"
#include "geostat/geom/metric.hpp"
#include "geostat/kern/batch.hpp"

namespace geostat {

namespace {

// Wide stencil keeps the graph-metric anisotropy under one percent.
struct Offset {
  int dj, dk;
};

std::vector<Offset> stencil() {
  std::vector<Offset> s;
  for (int dj = -3; dj <= 3; ++dj)
    for (int dk = -3; dk <= 3; ++dk)
      if (dj != 0 || dk != 0) s.push_back({dj, dk});
  return s;
}

}  // namespace

MonotonicityReport monotonicity_check(const HoleSet& holes, const RadialSurface& surface, int j0,
                                      int k0, const Constants& constants,
                                      const MonotonicityOptions& options) {
  const SphereGrid& g = *surface.grid;
  const int nth = g.ntheta(), nph = g.nphi(), n = g.size();
  if (j0 < 0 || j0 >= nth || k0 < 0 || k0 >= nph)
    throw Error(ErrorCode::IndexOutOfRange, "x0 grid index");

  MonotonicityReport report;
  report.tolerance = options.tolerance;
  report.scale = options.scale > 0.0 ? options.scale : surface.mean_radius();
  const double c = report.scale;

  // Curvature and injectivity bounds for the admissible s-range.
  double kappa_scaled, i0_scaled;
  if (options.local_bounds) {
    // Ambient |K_g| sampled on the surface and on nearby radial offsets.
    double kappa_phys = 0.0;
    const SphereGrid& gs = *surface.grid;
    for (int j = 0; j < gs.ntheta(); j += 4)
      for (int k = 0; k < gs.nphi(); k += 8)
        for (double off : {0.8, 1.0, 1.25}) {
          const Vec3 x = surface.center + off * surface.r[gs.idx(j, k)] * gs.dir(j, k);
          const CurvatureSample cs = curvature_at(holes, x);
          kappa_phys = std::max(
              kappa_phys, std::max(std::abs(cs.sectional_min), std::abs(cs.sectional_max)));
        }
    kappa_scaled = kappa_phys * c * c;
    i0_scaled = 1.0 / std::sqrt(std::max(kappa_scaled, 1e-12));
    report.bounds_source = "local curvature sampling";
  } else {
    kappa_scaled = constants.kappa;
    i0_scaled = constants.i0;
    report.bounds_source = "explicit constants";
  }
  report.kappa = kappa_scaled;
  report.i0 = i0_scaled;
  const double sqrt_kappa = std::sqrt(std::max(0.0, kappa_scaled));

  // Conformal factor and flat area element at all grid points.
  const SurfaceGeometry geo = surface_geometry(surface);
  std::vector<double> chi(n), psi(n);
  kern::JetOut out;
  out.chi = chi.data();
  out.psi = psi.data();
  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  kern::eval_batch(soa, geo.x.data(), geo.y.data(), geo.z.data(), n, out);
  std::vector<double> Psi(n), cell_area(n);
  for (int i = 0; i < n; ++i) {
    Psi[i] = chi[i] * psi[i];
    cell_area[i] = Psi[i] * Psi[i] * geo.dA[i] / (c * c);
  }

  auto wrap = [&](int j, int k, int& jj, int& kk) {
    kk = ((k % nph) + nph) % nph;
    jj = j;
    if (jj < 0) {
      jj = -1 - jj;
      kk = (kk + nph / 2) % nph;
    } else if (jj >= nth) {
      jj = 2 * nth - 1 - jj;
      kk = (kk + nph / 2) % nph;
    }
  };

  // Dijkstra from x0 over chord edges; Simpson weight for the g-length.
  const auto offs = stencil();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  const int start = g.idx(j0, k0);
  dist[start] = 0.0;
  heap.push({0.0, start});
  auto point = [&](int i) { return Vec3{geo.x[i], geo.y[i], geo.z[i]}; };
  while (!heap.empty()) {
    const auto [d0, i] = heap.top();
    heap.pop();
    if (d0 > dist[i]) continue;
    const int j = i / nph, k = i % nph;
    for (const Offset& o : offs) {
      int jj, kk;
      wrap(j + o.dj, k + o.dk, jj, kk);
      const int t = g.idx(jj, kk);
      if (t == i) continue;
      const Vec3 a = point(i), b = point(t);
      const double chord = norm(a - b);
      const double psim = conformal_eval(holes, 0.5 * (a + b), 0).Psi;
      const double w = chord * (Psi[i] + 4.0 * psim + Psi[t]) / 6.0 / c;
      if (dist[i] + w < dist[t]) {
        dist[t] = dist[i] + w;
        heap.push({dist[t], t});
      }
    }
  }

  // Admissible s-range.
  double reach = 0.0;
  for (double d : dist)
    if (std::isfinite(d)) reach = std::max(reach, d);
  double cell = 0.0;
  {
    int jj, kk;
    wrap(j0 + 1, k0, jj, kk);
    cell = norm(point(start) - point(g.idx(jj, kk))) * Psi[start] / c;
  }
  double s_max = 0.8 * reach;
  if (i0_scaled > 0.0) s_max = std::min(s_max, i0_scaled);
  if (kappa_scaled > 0.0) s_max = std::min(s_max, 1.0 / sqrt_kappa);
  const double s_min = std::max(6.0 * cell, s_max / 64.0);
  if (!(s_min < s_max))
    throw Error(ErrorCode::RangeEmpty, "admissible s-interval is degenerate at this resolution");
  report.s_min = s_min;
  report.s_max = s_max;

  // Soft membership over a one-cell band removes the O(perimeter * cell)
  // undercount a hard cutoff would have.
  std::vector<double> band(n);
  for (int i = 0; i < n; ++i) band[i] = std::sqrt(cell_area[i]);

  const int ns = std::max(4, options.samples);
  report.s.resize(ns);
  report.area.resize(ns);
  report.value.resize(ns);
  report.floor_.resize(ns);
  for (int q = 0; q < ns; ++q) {
    const double s = s_min * std::pow(s_max / s_min, q / double(ns - 1));
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = std::clamp((s - dist[i]) / band[i] + 0.5, 0.0, 1.0);
      area += w * cell_area[i];
    }
    report.s[q] = s;
    report.area[q] = area;
    report.value[q] = std::exp(2.0 * sqrt_kappa * s) * area / (s * s);
    report.floor_[q] = M_PI * std::exp(-2.0 * sqrt_kappa * s) * s * s;
  }

  report.nondecreasing = true;
  for (int q = 0; q + 1 < ns; ++q)
    if (report.value[q + 1] < report.value[q] * (1.0 - options.tolerance))
      report.nondecreasing = false;
  report.floor_pass = true;
  for (int q = 0; q < ns; ++q)
    if (report.area[q] < report.floor_[q] * (1.0 - options.tolerance)) report.floor_pass = false;
  return report;
}

}  // namespace geostat
