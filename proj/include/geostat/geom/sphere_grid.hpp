#pragma once

#include <array>
#include <memory>
#include <vector>

#include "geostat/util/legendre.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

// Latitude-longitude grid: Gauss-Legendre colatitudes (no points on the
// poles) by uniform longitudes.  Quadrature of smooth surface integrands is
// spectrally accurate; finite-difference stencils cross the poles through
// the antipodal (phi + pi) column.
class SphereGrid {
 public:
  SphereGrid(int ntheta, int nphi, int lmax);

  int ntheta() const { return ntheta_; }
  int nphi() const { return nphi_; }
  int lmax() const { return lmax_; }
  int size() const { return ntheta_ * nphi_; }
  int idx(int j, int k) const { return j * nphi_ + k; }

  double theta(int j) const { return theta_[j]; }
  double phi(int k) const { return phi_[k]; }
  double cos_theta(int j) const { return ctheta_[j]; }
  double sin_theta(int j) const { return stheta_[j]; }
  double weight_u(int j) const { return wtheta_[j]; }  // Gauss weight in u = cos(theta)
  double dphi() const { return dphi_; }

  Vec3 dir(int j, int k) const {
    return {stheta_[j] * cphi_[k], stheta_[j] * sphi_[k], ctheta_[j]};
  }
  // Orthonormal spherical frame at (j,k).
  Vec3 e_theta(int j, int k) const {
    return {ctheta_[j] * cphi_[k], ctheta_[j] * sphi_[k], -stheta_[j]};
  }
  Vec3 e_phi(int k) const { return {-sphi_[k], cphi_[k], 0.0}; }

  // Value of a scalar field at extended row index j in [-2, ntheta+2),
  // continuing smoothly across the poles.
  double fetch(const std::vector<double>& f, int j, int k) const;

  // sum f * w_u(j) * dphi  ==  integral of f over the unit sphere measure
  // sin(theta) dtheta dphi.
  double integrate(const std::vector<double>& f) const;

  struct Derivs {
    std::vector<double> dth, dth2, dph, dph2, dthph;
  };
  Derivs derivatives(const std::vector<double>& f) const;

  // Real spherical-harmonic coefficients; sin-part entries with m = 0 are
  // unused and stay zero.
  struct Spectral {
    int lmax = 0;
    std::vector<double> c;  // cos / m=0 part, plm_index layout
    std::vector<double> s;  // sin part
  };

  Spectral analyze(const std::vector<double>& f, int lmax) const;
  void synthesize(const Spectral& coeffs, std::vector<double>& out) const;

  // Interpolates a field at arbitrary (theta, phi), bilinear with pole
  // continuation.
  double interpolate(const std::vector<double>& f, double theta, double phi) const;

  static std::shared_ptr<const SphereGrid> get(int ntheta, int nphi, int lmax);

 private:
  int ntheta_, nphi_, lmax_;
  std::vector<double> theta_, ctheta_, stheta_, wtheta_;
  std::vector<double> phi_, cphi_, sphi_;
  double dphi_;
  // Per-row 5-point Fornberg weights for d/dtheta and d2/dtheta2 on the
  // extended colatitude nodes.
  std::vector<std::array<double, 5>> w1_, w2_;
  std::vector<double> plm_;              // [j][plm_index(l,m)] tables
  std::vector<double> cos_m_, sin_m_;    // [k][m] tables, m <= lmax
  int plm_stride_ = 0;
};

}  // namespace geostat
