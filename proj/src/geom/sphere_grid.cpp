#include "geostat/geom/sphere_grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "geostat/error.hpp"

namespace geostat {

namespace {

// Fornberg finite-difference weights for derivative `order` at x0 over the
// given nodes.
void fornberg(double x0, const double* nodes, int n, int order, double* w) {
  std::vector<double> c(static_cast<std::size_t>(n) * (order + 1), 0.0);
  auto C = [&](int i, int m) -> double& { return c[i * (order + 1) + m]; };
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  C(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int m = mn; m >= 1; --m) C(i, m) = c1 * (m * C(i - 1, m - 1) - c5 * C(i - 1, m)) / c2;
        C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
      }
      for (int m = mn; m >= 1; --m) C(j, m) = (c4 * C(j, m) - m * C(j, m - 1)) / c3;
      C(j, 0) = c4 * C(j, 0) / c3;
    }
    c1 = c2;
  }
  for (int i = 0; i < n; ++i) w[i] = C(i, order);
}

}  // namespace

SphereGrid::SphereGrid(int ntheta, int nphi, int lmax)
    : ntheta_(ntheta), nphi_(nphi), lmax_(lmax) {
  if (ntheta < 8 || nphi < 8 || nphi % 2 != 0)
    throw Error(ErrorCode::DegenerateGrid, "grid needs ntheta >= 8 and even nphi >= 8");
  if (lmax > ntheta - 1) lmax_ = ntheta - 1;

  const GaussLegendre gl = gauss_legendre(ntheta);
  theta_.resize(ntheta);
  ctheta_.resize(ntheta);
  stheta_.resize(ntheta);
  wtheta_.resize(ntheta);
  for (int j = 0; j < ntheta; ++j) {
    // Nodes descending in u so theta increases from the north pole.
    const double u = gl.x[ntheta - 1 - j];
    ctheta_[j] = u;
    stheta_[j] = std::sqrt((1.0 - u) * (1.0 + u));
    theta_[j] = std::acos(u);
    wtheta_[j] = gl.w[ntheta - 1 - j];
  }

  dphi_ = 2.0 * M_PI / nphi;
  phi_.resize(nphi);
  cphi_.resize(nphi);
  sphi_.resize(nphi);
  for (int k = 0; k < nphi; ++k) {
    phi_[k] = k * dphi_;
    cphi_[k] = std::cos(phi_[k]);
    sphi_[k] = std::sin(phi_[k]);
  }

  // Extended colatitudes: reflect through both poles.
  auto theta_ext = [this](int j) -> double {
    if (j < 0) return -theta_[-1 - j];
    if (j >= ntheta_) return 2.0 * M_PI - theta_[2 * ntheta_ - 1 - j];
    return theta_[j];
  };
  w1_.resize(ntheta);
  w2_.resize(ntheta);
  double nodes[5];
  for (int j = 0; j < ntheta; ++j) {
    for (int s = 0; s < 5; ++s) nodes[s] = theta_ext(j - 2 + s);
    fornberg(theta_[j], nodes, 5, 1, w1_[j].data());
    fornberg(theta_[j], nodes, 5, 2, w2_[j].data());
  }

  plm_stride_ = plm_index(lmax_, lmax_) + 1;
  plm_.resize(static_cast<std::size_t>(ntheta) * plm_stride_);
  std::vector<double> row;
  for (int j = 0; j < ntheta; ++j) {
    assoc_legendre_normalized(lmax_, ctheta_[j], row);
    std::copy(row.begin(), row.end(), plm_.begin() + static_cast<std::size_t>(j) * plm_stride_);
  }
  cos_m_.resize(static_cast<std::size_t>(nphi) * (lmax_ + 1));
  sin_m_.resize(static_cast<std::size_t>(nphi) * (lmax_ + 1));
  for (int k = 0; k < nphi; ++k)
    for (int m = 0; m <= lmax_; ++m) {
      cos_m_[k * (lmax_ + 1) + m] = std::cos(m * phi_[k]);
      sin_m_[k * (lmax_ + 1) + m] = std::sin(m * phi_[k]);
    }
}

double SphereGrid::fetch(const std::vector<double>& f, int j, int k) const {
  k = ((k % nphi_) + nphi_) % nphi_;
  if (j < 0) {
    j = -1 - j;
    k = (k + nphi_ / 2) % nphi_;
  } else if (j >= ntheta_) {
    j = 2 * ntheta_ - 1 - j;
    k = (k + nphi_ / 2) % nphi_;
  }
  return f[idx(j, k)];
}

double SphereGrid::integrate(const std::vector<double>& f) const {
  double total = 0.0;
  for (int j = 0; j < ntheta_; ++j) {
    double row = 0.0;
    for (int k = 0; k < nphi_; ++k) row += f[idx(j, k)];
    total += row * wtheta_[j];
  }
  return total * dphi_;
}

SphereGrid::Derivs SphereGrid::derivatives(const std::vector<double>& f) const {
  Derivs d;
  const int n = size();
  d.dth.resize(n);
  d.dth2.resize(n);
  d.dph.resize(n);
  d.dph2.resize(n);
  d.dthph.resize(n);

  // phi derivatives: 4th-order periodic central stencils.
  const double i12h = 1.0 / (12.0 * dphi_);
  const double i12h2 = 1.0 / (12.0 * dphi_ * dphi_);
  for (int j = 0; j < ntheta_; ++j) {
    for (int k = 0; k < nphi_; ++k) {
      const double fm2 = f[idx(j, (k + nphi_ - 2) % nphi_)];
      const double fm1 = f[idx(j, (k + nphi_ - 1) % nphi_)];
      const double f0 = f[idx(j, k)];
      const double fp1 = f[idx(j, (k + 1) % nphi_)];
      const double fp2 = f[idx(j, (k + 2) % nphi_)];
      d.dph[idx(j, k)] = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) * i12h;
      d.dph2[idx(j, k)] = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) * i12h2;
    }
  }

  // theta derivatives through the extended fetch; the mixed derivative
  // applies the theta stencil to the dphi field (same pole continuation).
  for (int j = 0; j < ntheta_; ++j) {
    const auto& w1 = w1_[j];
    const auto& w2 = w2_[j];
    for (int k = 0; k < nphi_; ++k) {
      double a1 = 0.0, a2 = 0.0, am = 0.0;
      for (int s = 0; s < 5; ++s) {
        const double v = fetch(f, j - 2 + s, k);
        a1 += w1[s] * v;
        a2 += w2[s] * v;
        am += w1[s] * fetch(d.dph, j - 2 + s, k);
      }
      d.dth[idx(j, k)] = a1;
      d.dth2[idx(j, k)] = a2;
      d.dthph[idx(j, k)] = am;
    }
  }
  return d;
}

SphereGrid::Spectral SphereGrid::analyze(const std::vector<double>& f, int lmax) const {
  if (lmax > lmax_) lmax = lmax_;
  Spectral sp;
  sp.lmax = lmax;
  const int ncoef = plm_index(lmax, lmax) + 1;
  sp.c.assign(ncoef, 0.0);
  sp.s.assign(ncoef, 0.0);

  // Longitude transforms per row, then Gauss-weighted Legendre projections.
  const int mstride = lmax_ + 1;
  std::vector<double> cm(static_cast<std::size_t>(ntheta_) * (lmax + 1), 0.0);
  std::vector<double> sm(static_cast<std::size_t>(ntheta_) * (lmax + 1), 0.0);
  for (int j = 0; j < ntheta_; ++j) {
    for (int k = 0; k < nphi_; ++k) {
      const double v = f[idx(j, k)];
      const double* cs = &cos_m_[k * mstride];
      const double* sn = &sin_m_[k * mstride];
      for (int m = 0; m <= lmax; ++m) {
        cm[j * (lmax + 1) + m] += v * cs[m];
        sm[j * (lmax + 1) + m] += v * sn[m];
      }
    }
  }
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  for (int j = 0; j < ntheta_; ++j) {
    const double wq = wtheta_[j] * dphi_;
    const double* plm = &plm_[static_cast<std::size_t>(j) * plm_stride_];
    for (int l = 0; l <= lmax; ++l) {
      sp.c[plm_index(l, 0)] += wq * inv_sqrt_2pi * plm[plm_index(l, 0)] * cm[j * (lmax + 1)];
      for (int m = 1; m <= l; ++m) {
        const double base = wq * inv_sqrt_pi * plm[plm_index(l, m)];
        sp.c[plm_index(l, m)] += base * cm[j * (lmax + 1) + m];
        sp.s[plm_index(l, m)] += base * sm[j * (lmax + 1) + m];
      }
    }
  }
  return sp;
}

void SphereGrid::synthesize(const Spectral& coeffs, std::vector<double>& out) const {
  const int lmax = coeffs.lmax;
  out.assign(size(), 0.0);
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  const int mstride = lmax_ + 1;
  std::vector<double> gc(lmax + 1), gs(lmax + 1);
  for (int j = 0; j < ntheta_; ++j) {
    const double* plm = &plm_[static_cast<std::size_t>(j) * plm_stride_];
    std::fill(gc.begin(), gc.end(), 0.0);
    std::fill(gs.begin(), gs.end(), 0.0);
    for (int l = 0; l <= lmax; ++l) {
      gc[0] += coeffs.c[plm_index(l, 0)] * plm[plm_index(l, 0)] * inv_sqrt_2pi;
      for (int m = 1; m <= l; ++m) {
        const double p = plm[plm_index(l, m)] * inv_sqrt_pi;
        gc[m] += coeffs.c[plm_index(l, m)] * p;
        gs[m] += coeffs.s[plm_index(l, m)] * p;
      }
    }
    for (int k = 0; k < nphi_; ++k) {
      const double* cs = &cos_m_[k * mstride];
      const double* sn = &sin_m_[k * mstride];
      double v = gc[0];
      for (int m = 1; m <= lmax; ++m) v += gc[m] * cs[m] + gs[m] * sn[m];
      out[idx(j, k)] = v;
    }
  }
}

double SphereGrid::interpolate(const std::vector<double>& f, double theta, double phi) const {
  // Wrap into [0, pi] x [0, 2pi).
  theta = std::fmod(theta, 2.0 * M_PI);
  if (theta < 0.0) theta += 2.0 * M_PI;
  if (theta > M_PI) {
    theta = 2.0 * M_PI - theta;
    phi += M_PI;
  }
  phi = std::fmod(phi, 2.0 * M_PI);
  if (phi < 0.0) phi += 2.0 * M_PI;

  const double kf = phi / dphi_;
  int k0 = static_cast<int>(std::floor(kf));
  const double tk = kf - k0;
  k0 %= nphi_;

  // Row bracket in the extended colatitude list.
  int j0 = -3;
  auto th_ext = [this](int j) {
    if (j < 0) return -theta_[-1 - j];
    if (j >= ntheta_) return 2.0 * M_PI - theta_[2 * ntheta_ - 1 - j];
    return theta_[j];
  };
  for (int j = -1; j < ntheta_; ++j) {
    if (theta >= th_ext(j) && theta <= th_ext(j + 1)) {
      j0 = j;
      break;
    }
  }
  if (j0 == -3) j0 = theta < theta_[0] ? -1 : ntheta_ - 1;
  const double t0 = th_ext(j0), t1 = th_ext(j0 + 1);
  const double tj = (t1 > t0) ? (theta - t0) / (t1 - t0) : 0.0;

  const double f00 = fetch(f, j0, k0);
  const double f01 = fetch(f, j0, k0 + 1);
  const double f10 = fetch(f, j0 + 1, k0);
  const double f11 = fetch(f, j0 + 1, k0 + 1);
  return (1.0 - tj) * ((1.0 - tk) * f00 + tk * f01) + tj * ((1.0 - tk) * f10 + tk * f11);
}

std::shared_ptr<const SphereGrid> SphereGrid::get(int ntheta, int nphi, int lmax) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const SphereGrid>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(ntheta, nphi, lmax);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto grid = std::make_shared<const SphereGrid>(ntheta, nphi, lmax);
  cache[key] = grid;
  return grid;
}

}  // namespace geostat
