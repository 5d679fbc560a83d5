#include "geostat/geom/distance.hpp"

#include <algorithm>
#include <cmath>

#include "geostat/error.hpp"
#include "geostat/kern/batch.hpp"
#include "geostat/util/legendre.hpp"

namespace geostat {

namespace {

struct PathEval {
  const kern::HoleSoA* soa = nullptr;
  const GaussLegendre* quad = nullptr;

  // g-length of one segment and (optionally) its gradient w.r.t. the second
  // endpoint:  L = |b-a| int Psi dt,
  //            dL/db = Lhat (b-a)/|b-a| + |b-a| int t grad Psi dt.
  double segment(const Vec3& a, const Vec3& b, Vec3* grad_b) const {
    const Vec3 d = b - a;
    const double len = norm(d);
    if (len == 0.0) {
      if (grad_b) *grad_b = {};
      return 0.0;
    }
    const int nq = static_cast<int>(quad->x.size());
    double px[32] = {}, py[32] = {}, pz[32] = {}, chi[32] = {}, psi[32] = {};
    double gcx[32] = {}, gcy[32] = {}, gcz[32] = {}, gpx[32] = {}, gpy[32] = {}, gpz[32] = {};
    for (int q = 0; q < nq; ++q) {
      const double t = 0.5 * (quad->x[q] + 1.0);
      const Vec3 p = a + t * d;
      px[q] = p.x;
      py[q] = p.y;
      pz[q] = p.z;
    }
    kern::JetOut out;
    out.chi = chi;
    out.psi = psi;
    if (grad_b) {
      out.dchi_x = gcx;
      out.dchi_y = gcy;
      out.dchi_z = gcz;
      out.dpsi_x = gpx;
      out.dpsi_y = gpy;
      out.dpsi_z = gpz;
    }
    kern::eval_batch(*soa, px, py, pz, nq, out);
    double psi_int = 0.0;
    Vec3 tgrad_int;
    for (int q = 0; q < nq; ++q) {
      const double w = 0.5 * quad->w[q];
      psi_int += w * chi[q] * psi[q];
      if (grad_b) {
        const double t = 0.5 * (quad->x[q] + 1.0);
        const Vec3 gpsi = {psi[q] * gcx[q] + chi[q] * gpx[q], psi[q] * gcy[q] + chi[q] * gpy[q],
                           psi[q] * gcz[q] + chi[q] * gpz[q]};
        tgrad_int += (w * t) * gpsi;
      }
    }
    if (grad_b) *grad_b = (psi_int / len) * d + len * tgrad_int;
    return len * psi_int;
  }

  double total(const std::vector<Vec3>& path) const {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) sum += segment(path[i], path[i + 1], nullptr);
    return sum;
  }
};

bool inside(const Ball& b, const Vec3& x, double pad = 0.0) {
  return norm(x - b.center) < b.radius * (1.0 + pad);
}

Vec3 push_outside(const Ball& b, const Vec3& x) {
  Vec3 d = x - b.center;
  double n = norm(d);
  if (n < 1e-300) d = {1, 0, 0}, n = 1.0;
  return b.center + d * (b.radius * (1.0 + 1e-9) / n);
}

// Segment-ball clip: returns entry/exit parameters in (0,1) when the open
// segment crosses the ball interior.
bool clip(const Vec3& a, const Vec3& b, const Ball& ball, double& t1, double& t2) {
  const Vec3 d = b - a;
  const Vec3 f = a - ball.center;
  const double A = dot(d, d);
  if (A == 0.0) return false;
  const double B = 2.0 * dot(f, d);
  const double C = dot(f, f) - ball.radius * ball.radius;
  const double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return false;
  const double s = std::sqrt(disc);
  t1 = (-B - s) / (2.0 * A);
  t2 = (-B + s) / (2.0 * A);
  return t2 > 1e-12 && t1 < 1.0 - 1e-12;
}

// Detour arc around a ball from entry to exit; at most a semicircle by
// construction.  Nodes sit on the circumscribed radius R / cos(step/2), so
// the chords between them clear the sphere.
void append_arc(std::vector<Vec3>& out, const Ball& ball, const Vec3& e1, const Vec3& e2) {
  Vec3 u1 = normalized(e1 - ball.center);
  Vec3 u2 = normalized(e2 - ball.center);
  Vec3 axis = cross(u1, u2);
  double s = norm(axis);
  const double angle = std::atan2(s, dot(u1, u2));
  if (s < 1e-12) {
    // Antipodal entry/exit: pick any perpendicular rotation plane.
    Vec3 ref = std::abs(u1.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    axis = normalized(cross(u1, ref));
  } else {
    axis = axis / s;
  }
  const int steps = std::max(4, static_cast<int>(std::ceil(angle / 0.15)));
  const double R = ball.radius * (1.0 + 1e-12) / std::cos(0.5 * angle / steps);
  const Vec3 w = cross(axis, u1);
  for (int i = 1; i < steps; ++i) {
    const double t = angle * i / steps;
    out.push_back(ball.center + R * (std::cos(t) * u1 + std::sin(t) * w));
  }
}

std::vector<Vec3> initial_path(const Vec3& x, const Vec3& y, const std::vector<Ball>& balls) {
  std::vector<Vec3> path = {x};
  Vec3 cursor = x;
  // Greedy: repeatedly find the first ball the remaining straight run hits.
  for (int guard = 0; guard < 4 * static_cast<int>(balls.size()) + 4; ++guard) {
    double best_t = 2.0;
    int best = -1;
    double bt1 = 0.0, bt2 = 0.0;
    for (std::size_t i = 0; i < balls.size(); ++i) {
      double t1, t2;
      if (clip(cursor, y, balls[i], t1, t2) && t1 < best_t) {
        best_t = t1;
        best = static_cast<int>(i);
        bt1 = t1;
        bt2 = t2;
      }
    }
    if (best < 0) break;
    const Vec3 d = y - cursor;
    const Vec3 e1 = push_outside(balls[best], cursor + std::max(bt1, 0.0) * d);
    const Vec3 e2 = push_outside(balls[best], cursor + std::min(bt2, 1.0) * d);
    path.push_back(e1);
    append_arc(path, balls[best], e1, e2);
    path.push_back(e2);
    cursor = e2;
  }
  path.push_back(y);
  return path;
}

std::vector<Vec3> resample(const std::vector<Vec3>& path, int nodes) {
  std::vector<double> cum(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) cum[i] = cum[i - 1] + norm(path[i] - path[i - 1]);
  const double total = cum.back();
  std::vector<Vec3> out;
  out.reserve(nodes);
  out.push_back(path.front());
  std::size_t seg = 0;
  for (int i = 1; i < nodes - 1; ++i) {
    const double target = total * i / (nodes - 1);
    while (seg + 1 < cum.size() && cum[seg + 1] < target) ++seg;
    const double denom = cum[seg + 1] - cum[seg];
    const double t = denom > 0.0 ? (target - cum[seg]) / denom : 0.0;
    out.push_back(path[seg] + t * (path[seg + 1] - path[seg]));
  }
  out.push_back(path.back());
  return out;
}

}  // namespace

DistanceResult distance_upper(const HoleSet& holes, const Vec3& x, const Vec3& y,
                              const std::vector<Ball>& excluded, const DistanceOptions& options) {
  for (const Ball& b : excluded)
    if (inside(b, x) || inside(b, y))
      throw Error(ErrorCode::Unreachable, "endpoint lies inside an excluded ball");

  DistanceResult result;
  result.flat = norm(x - y);
  if (result.flat == 0.0) return result;

  const kern::HoleSoA soa = kern::HoleSoA::from(holes);
  static const GaussLegendre quad8 = gauss_legendre(8);
  static const GaussLegendre quad16 = gauss_legendre(16);
  static const GaussLegendre quad32 = gauss_legendre(32);
  PathEval ev{&soa, &quad8};

  std::vector<Vec3> path = resample(initial_path(x, y, excluded), std::max(3, options.nodes));
  for (Vec3& p : path)
    for (const Ball& b : excluded)
      if (inside(b, p)) p = push_outside(b, p);

  double length = ev.total(path);
  for (int sweep = 0; sweep < options.sweeps; ++sweep) {
    const double before = length;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      Vec3 ga, gb;
      const double l0 = ev.segment(path[i - 1], path[i], &ga) + ev.segment(path[i + 1], path[i], &gb);
      Vec3 grad = ga + gb;
      const double gn = norm(grad);
      if (gn == 0.0) continue;
      // Backtracking line search from a step of the local two-segment span.
      double alpha = 0.5 * l0;
      for (int tries = 0; tries < 8; ++tries) {
        Vec3 cand = path[i] - alpha * grad / gn;
        for (const Ball& b : excluded)
          if (inside(b, cand)) cand = push_outside(b, cand);
        const double l1 =
            ev.segment(path[i - 1], cand, nullptr) + ev.segment(path[i + 1], cand, nullptr);
        if (l1 < l0) {
          length += l1 - l0;
          path[i] = cand;
          break;
        }
        alpha *= 0.2;
      }
    }
    if (before - length < options.improve_tol * std::max(length, 1.0)) break;
  }

  // Feasibility repair: replace any segment still clipping a ball by a
  // circumscribed detour arc, so the repaired polyline clears the sphere.
  for (int pass = 0; pass < 8; ++pass) {
    bool dirty = false;
    std::vector<Vec3> repaired;
    repaired.reserve(path.size() * 2);
    repaired.push_back(path.front());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      for (const Ball& b : excluded) {
        double t1, t2;
        if (clip(path[i], path[i + 1], b, t1, t2)) {
          const Vec3 d = path[i + 1] - path[i];
          const Vec3 e1 = push_outside(b, path[i] + std::max(t1, 0.0) * d);
          const Vec3 e2 = push_outside(b, path[i] + std::min(t2, 1.0) * d);
          repaired.push_back(e1);
          append_arc(repaired, b, e1, e2);
          repaired.push_back(e2);
          ++result.repairs;
          dirty = true;
          break;
        }
      }
      repaired.push_back(path[i + 1]);
    }
    path = std::move(repaired);
    if (!dirty) break;
  }

  ev.quad = &quad16;
  const double l16 = ev.total(path);
  ev.quad = &quad32;
  const double l32 = ev.total(path);

  result.upper = l32 + std::abs(l32 - l16);
  result.path_flat = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) result.path_flat += norm(path[i + 1] - path[i]);
  // A feasible path can never beat the flat segment under g >= delta.
  result.upper = std::max(result.upper, result.flat);
  result.path = std::move(path);
  return result;
}

}  // namespace geostat
