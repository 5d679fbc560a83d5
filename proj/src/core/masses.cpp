#include "geostat/core/masses.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace geostat {

namespace {

void check_index(const HoleSet& holes, int i) {
  if (i < 0 || i >= holes.size()) {
    std::ostringstream msg;
    msg << "hole index " << i << " out of range [0," << holes.size() << ")";
    throw Error(ErrorCode::IndexOutOfRange, msg.str());
  }
}

// Kahan compensated sum over pre-ordered terms.
class CompensatedSum {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace

double adm_mass(const HoleSet& holes) {
  CompensatedSum sum;
  for (const Hole& h : holes.holes) sum.add(h.alpha + h.beta);
  return sum.value();
}

double end_mass(const HoleSet& holes, int i) {
  check_index(holes, i);
  const Hole& hi = holes[i];
  CompensatedSum sum;
  sum.add(hi.alpha + hi.beta);
  for (int j = 0; j < holes.size(); ++j) {
    if (j == i) continue;
    const Hole& hj = holes[j];
    const double rij = norm(hi.p - hj.p);
    sum.add((hi.beta * hj.alpha + hj.beta * hi.alpha) / rij);
  }
  return sum.value();
}

double end_charge(const HoleSet& holes, int i) {
  check_index(holes, i);
  const Hole& hi = holes[i];
  CompensatedSum sum;
  sum.add(hi.beta - hi.alpha);
  for (int j = 0; j < holes.size(); ++j) {
    if (j == i) continue;
    const Hole& hj = holes[j];
    const double rij = norm(hi.p - hj.p);
    sum.add((hi.beta * hj.alpha - hj.beta * hi.alpha) / rij);
  }
  return sum.value();
}

std::optional<SeparationData> try_separation(const HoleSet& holes) {
  const int n = holes.size();
  SeparationData data;
  data.base_distances.resize(n);
  double sigma = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double base = norm(holes[i].p);
    if (base < hole_coincidence_tolerance(holes[i].p)) return std::nullopt;
    data.base_distances[i] = base;
    sigma = std::min(sigma, base);
  }
  if (n >= 2) {
    data.sigma_i.assign(n, std::numeric_limits<double>::infinity());
    data.sigma_i_out.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double r = norm(holes[i].p - holes[j].p);
        data.sigma_i[i] = std::min(data.sigma_i[i], r);
        data.sigma_i_out[i] = std::max(data.sigma_i_out[i], r);
      }
      sigma = std::min(sigma, data.sigma_i[i]);
    }
  }
  data.sigma = sigma;
  return data;
}

SeparationData separation(const HoleSet& holes) {
  auto data = try_separation(holes);
  if (!data)
    throw Error(ErrorCode::HoleAtOrigin, "separation factor undefined with a hole at the origin");
  return *data;
}

PositiveMassCertificate positive_mass_certificate(const HoleSet& holes) {
  PositiveMassCertificate cert;
  cert.mass = adm_mass(holes);
  for (const Hole& h : holes.holes) cert.decomposition.emplace_back(h.alpha, h.beta);
  cert.pass = cert.mass > 0.0;
  cert.rigidity_note =
      "m = 0 would force every alpha_i = beta_i = 0 and the flat manifold; "
      "excluded by hole-set validation, so m > 0";
  return cert;
}

}  // namespace geostat
