#include "geostat/util/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace geostat {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.x.resize(n);
  gl.w.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.x[i] = -x;
    gl.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.w[i] = w;
    gl.w[n - 1 - i] = w;
  }
  return gl;
}

void assoc_legendre_normalized(int lmax, double u, std::vector<double>& out) {
  const int sz = plm_index(lmax, lmax) + 1;
  out.resize(sz);
  const double s = std::sqrt(std::max(0.0, (1.0 - u) * (1.0 + u)));
  // P~_00 = 1/sqrt(2)
  out[plm_index(0, 0)] = std::sqrt(0.5);
  for (int m = 1; m <= lmax; ++m) {
    // P~_mm = -sqrt((2m+1)/(2m)) * s * P~_{m-1,m-1}
    out[plm_index(m, m)] =
        -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * out[plm_index(m - 1, m - 1)];
  }
  for (int m = 0; m < lmax; ++m) {
    out[plm_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * u * out[plm_index(m, m)];
    for (int l = m + 2; l <= lmax; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      const double b = std::sqrt(((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - double(m) * m)) /
                                 ((2.0 * l - 3.0) * (double(l) * l - double(m) * m)));
      out[plm_index(l, m)] = a * u * out[plm_index(l - 1, m)] - b * out[plm_index(l - 2, m)];
    }
  }
}

}  // namespace geostat
