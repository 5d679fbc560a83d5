#include "geostat/flat/constants_manifest.hpp"

#include <algorithm>
#include <cmath>

namespace geostat {

ConstantsManifest extract_constants(const Constants& base) {
  ConstantsManifest m;
  m.base = base;
  const double e0 = base.eps0;
  const double C1 = base.C1;

  // a = arccos((1+eps)^-1) * 2R / pi; the ratio to sqrt(eps) peaks at eps -> 0
  // with value sqrt(2).  Scan the interval anyway.
  double eta = std::sqrt(2.0);
  for (int i = 1; i <= 256; ++i) {
    const double eps = e0 * i / 256.0;
    eta = std::max(eta, std::acos(1.0 / (1.0 + eps)) / std::sqrt(eps));
  }
  m.C_a = 2.0 * eta / M_PI;
  m.provenance.emplace_back("C_a", "hemispherical width over sqrt(eps), D = 2R");

  // hbar = max{sqrt(2 lambda D), D sqrt(eps^2 + 2 eps)} with lambda <= 24 R eps.
  m.C_h = std::max(std::sqrt(96.0), 2.0 * std::sqrt(2.0 + e0));
  m.provenance.emplace_back("C_h", "height bound with lambda <= 24 R eps and D = 2R");

  m.C2 = 2.0 * m.C_h + m.C_a;
  m.provenance.emplace_back("C2", "2 hbar + a <= C2 R sqrt(eps)");

  m.C_prime = std::max(4.0 * M_PI / 3.0 * std::pow(1.0 + e0, 3),
                       4.0 * M_PI * std::pow(1.0 + e0, 2) * (1.0 + 96.0 * std::pow(e0, 4)));
  m.provenance.emplace_back(
      "C_prime", "W volume (4pi/3)(1+eps0)^3 vs boundary 4pi(1+eps0)^2(1+96 eps0^4)");

  // Flat excess: (4pi/3)(3*24 + 24^3 eps^2 + 768 eps^5) R^3 eps at eps0.
  const double c_m2 =
      4.0 * M_PI / 3.0 * (72.0 + std::pow(24.0, 3) * e0 * e0 + 768.0 * std::pow(e0, 5));
  // g-excess: shell term plus the per-hole annulus chain evaluated at eps0.
  const double c_shell =
      4.0 * M_PI / 3.0 * std::pow(1.0 + e0, 3) * (72.0 + std::pow(24.0, 3) * e0 * e0);
  const double c_annuli =
      M_PI * std::pow(e0, 5) *
      (64.0 * 768.0 / 3.0 + 48.0 * 96.0 * e0 + 600.0 * e0 * e0 + 20.0 * (4.0 * e0 * e0 + 1.0) +
       (60.0 * C1 + 96.0 * C1 * C1 + 64.0 * C1 * C1 * C1) * std::pow(e0, 3));
  m.C_dprime = std::max(c_m2, c_shell + c_annuli);
  m.provenance.emplace_back("C_dprime",
                            "max of the flat closed-form chain and the shell+annuli chain");

  m.CF_prime = 2.0 * m.C2 * m.C_prime;
  m.CF_dprime = 2.0 * m.C2 * m.C_prime + 2.0 * m.C_dprime * std::sqrt(e0);
  m.C_DF = 3.0 * m.C2 * m.C_prime + 2.0 * m.C_dprime * std::sqrt(e0);
  m.provenance.emplace_back("CF", "dF <= C2 R sqrt(eps)(2C'R^3 + 2C'R^2) + 2C'' R^3 eps");
  m.provenance.emplace_back("C_DF", "D dDF bound divided by D = 2R");
  return m;
}

}  // namespace geostat
