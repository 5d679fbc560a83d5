#pragma once

#include <string>
#include <vector>

#include "geostat/horizon/constants.hpp"

namespace geostat {

// Numeric values for the universal constants of the volume and distance
// estimates, recomputed from the underlying inequality chains at eps0 and
// frozen per run.  Only existence of such constants is canonical; the
// numeric values below are implementation artifacts and are labelled as
// such in every report.
struct ConstantsManifest {
  Constants base;
  double C_prime = 0.0;    // Vol_g(W) <= C' R^3 and Vol_g(dW) <= C' R^2
  double C_dprime = 0.0;   // Vol_g(M1\W), Vol_d(M2\W) <= C'' R^3 eps
  double C_a = 0.0;        // a <= C_a R sqrt(eps)
  double C_h = 0.0;        // hbar <= C_h R sqrt(eps)
  double C2 = 0.0;         // 2 hbar + a <= C2 R sqrt(eps)
  double CF_prime = 0.0;   // dF <= CF' R^4 sqrt(eps) + CF'' R^3 sqrt(eps)
  double CF_dprime = 0.0;
  double C_DF = 0.0;       // dDF <= C_DF R^3 sqrt(eps)
  std::vector<std::pair<std::string, std::string>> provenance;
};

ConstantsManifest extract_constants(const Constants& base);

}  // namespace geostat
