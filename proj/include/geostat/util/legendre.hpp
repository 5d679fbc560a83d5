#pragma once

#include <vector>

namespace geostat {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

GaussLegendre gauss_legendre(int n);

// Orthonormal associated Legendre values P~_l^m(u) for fixed u and all
// 0 <= m <= l <= lmax, packed by plm_index().  Normalization is such that
// int_{-1}^{1} P~_l^m(u)^2 du = 1, so the real spherical harmonics are
//   Y_l0  = P~_l0 / sqrt(2 pi)
//   Y_lm^c = P~_lm cos(m phi) / sqrt(pi),  Y_lm^s = P~_lm sin(m phi) / sqrt(pi).
inline int plm_index(int l, int m) { return l * (l + 1) / 2 + m; }

void assoc_legendre_normalized(int lmax, double u, std::vector<double>& out);

}  // namespace geostat
