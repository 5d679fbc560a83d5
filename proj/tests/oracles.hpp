#pragma once

// Independent numerical oracles for the test suites: generic tensor-calculus
// scalar curvature by finite differences of the metric components, adaptive
// 1-d quadrature, and small helpers.  Nothing here touches the closed-form
// curvature path under test.

#include <array>
#include <cmath>
#include <functional>

#include "geostat/util/vec3.hpp"

namespace oracles {

using geostat::Vec3;

using MetricFn = std::function<std::array<std::array<double, 3>, 3>(const Vec3&)>;

// Scalar curvature of an arbitrary 3-metric via second-order central
// differences of g_ij: Christoffels, then the Ricci contraction
//   R_ik = d_l Gamma^l_ik - d_i Gamma^l_lk + Gamma^l_lm Gamma^m_ik
//          - Gamma^l_im Gamma^m_lk.
inline double scalar_curvature_fd(const MetricFn& metric, const Vec3& x, double h) {
  auto inv3 = [](const std::array<std::array<double, 3>, 3>& m) {
    std::array<std::array<double, 3>, 3> inv{};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
  };

  // Christoffel symbols at a point by central differences of the metric.
  auto christoffel = [&](const Vec3& p) {
    std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};
    std::array<std::array<std::array<double, 3>, 3>, 3> dg{};  // dg[l][i][j] = d_l g_ij
    for (int l = 0; l < 3; ++l) {
      Vec3 e;
      e[l] = h;
      const auto gp = metric(p + e);
      const auto gm = metric(p - e);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dg[l][i][j] = (gp[i][j] - gm[i][j]) / (2.0 * h);
    }
    const auto ginv = inv3(metric(p));
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double sum = 0.0;
          for (int l = 0; l < 3; ++l)
            sum += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
          gamma[k][i][j] = 0.5 * sum;
        }
    return gamma;
  };

  // d_l Gamma^k_ij by central differences of the Christoffels.
  std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> dgamma{};
  for (int l = 0; l < 3; ++l) {
    Vec3 e;
    e[l] = h;
    const auto gp = christoffel(x + e);
    const auto gm = christoffel(x - e);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dgamma[l][k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2.0 * h);
  }
  const auto gam = christoffel(x);
  const auto ginv = inv3(metric(x));

  double R = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      double ric = 0.0;
      for (int l = 0; l < 3; ++l) {
        ric += dgamma[l][l][i][k] - dgamma[i][l][l][k];
        for (int m = 0; m < 3; ++m)
          ric += gam[l][l][m] * gam[m][i][k] - gam[l][i][m] * gam[m][l][k];
      }
      R += ginv[i][k] * ric;
    }
  return R;
}

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace oracles
