#include "geostat/geom/metric.hpp"

#include <algorithm>

namespace geostat {

MetricSample metric_at(const HoleSet& holes, const Vec3& x) {
  const ConformalJet jet = conformal_eval(holes, x, 0);
  MetricSample s;
  s.point = x;
  s.factor = jet.Psi * jet.Psi;
  s.tensor = Mat3::identity() * s.factor;
  return s;
}

namespace {

CurvatureSample curvature_from_jet(const ConformalJet& jet) {
  const LogJet lj = log_jet(jet);
  CurvatureSample s;
  s.point = jet.point;

  // Gamma^k_ij = delta^k_i f_j + delta^k_j f_i - delta_ij f^k
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = 0.0;
        if (k == i) v += lj.grad_f[j];
        if (k == j) v += lj.grad_f[i];
        if (i == j) v -= lj.grad_f[k];
        s.christoffels[k][i][j] = v;
      }

  // Conformal Ricci in three dimensions (flat background):
  //   R_ij = -(f_ij - f_i f_j) - (lap f + |grad f|^2) delta_ij
  const double diag = lj.lap_f + lj.grad_f2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = -(lj.hess_f(i, j) - lj.grad_f[i] * lj.grad_f[j]);
      if (i == j) v -= diag;
      s.ricci(i, j) = v;
    }

  const double inv_factor = 1.0 / (lj.Psi * lj.Psi);
  s.scalar_curvature = inv_factor * (-4.0 * lj.lap_f - 2.0 * lj.grad_f2);
  s.e_norm_sq = inv_factor * norm2(lj.grad_u);

  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double kmin = 0.0, kmax = 0.0;
  for (int a = 0; a < 3; ++a) {
    const double k = sectional_curvature(s, jet.Psi, axes[a]);
    if (a == 0) {
      kmin = kmax = k;
    } else {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
  }
  s.sectional_min = kmin;
  s.sectional_max = kmax;
  return s;
}

}  // namespace

double sectional_curvature(const CurvatureSample& sample, double Psi, const Vec3& nu) {
  const double ric_nn = quad_form(sample.ricci, nu, nu) / (Psi * Psi * norm2(nu));
  return 0.5 * sample.scalar_curvature - ric_nn;
}

CurvatureSample curvature_at(const HoleSet& holes, const Vec3& x) {
  return curvature_from_jet(conformal_eval(holes, x, 2));
}

CurvaturePoint curvature_point(const HoleSet& holes, const Vec3& x) {
  CurvaturePoint p;
  p.jet = conformal_eval(holes, x, 2);
  p.sample = curvature_from_jet(p.jet);
  return p;
}

}  // namespace geostat
