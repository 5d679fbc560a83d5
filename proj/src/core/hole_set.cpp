#include "geostat/core/hole_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace geostat {

double hole_coincidence_tolerance(const Vec3& p) { return 1e-12 * std::max(1.0, norm(p)); }

std::string ValidationResult::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << error_code_name(issues[i].code) << " (" << issues[i].message << ")";
  }
  return os.str();
}

ValidationResult validate(const HoleSet& set) {
  ValidationResult result;
  auto add = [&result](ErrorCode code, const std::string& msg) {
    result.issues.push_back({code, msg});
  };

  if (set.holes.empty()) {
    add(ErrorCode::EmptyHoleSet, "at least one hole is required");
    return result;
  }

  for (int i = 0; i < set.size(); ++i) {
    const Hole& h = set[i];
    std::ostringstream tag;
    tag << "hole " << i;
    if (!(h.alpha > 0.0)) add(ErrorCode::NonPositiveAlpha, tag.str());
    if (h.beta < 0.0) add(ErrorCode::NegativeBeta, tag.str());
    if (set.strict_beta && !(h.beta > 0.0))
      add(ErrorCode::ZeroBetaWithStrictFlag, tag.str() + " has beta = 0 with strict_beta set");
    if (!std::isfinite(h.alpha) || !std::isfinite(h.beta) || !std::isfinite(h.p.x) ||
        !std::isfinite(h.p.y) || !std::isfinite(h.p.z))
      add(ErrorCode::BadConfig, tag.str() + " has a non-finite entry");
  }

  for (int i = 0; i < set.size(); ++i) {
    for (int j = i + 1; j < set.size(); ++j) {
      const double tol =
          std::max(hole_coincidence_tolerance(set[i].p), hole_coincidence_tolerance(set[j].p));
      if (norm(set[i].p - set[j].p) < tol) {
        std::ostringstream msg;
        msg << "holes " << i << " and " << j << " coincide";
        add(ErrorCode::DuplicatePosition, msg.str());
      }
    }
  }
  return result;
}

HoleSet validated(HoleSet set) {
  const ValidationResult result = validate(set);
  if (!result.ok()) throw Error(result.issues.front().code, result.describe());
  return set;
}

NearestHole nearest_hole(const HoleSet& set, const Vec3& x) {
  NearestHole best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < set.size(); ++i) {
    const double d = norm(x - set[i].p);
    if (d < best.distance) {
      best.distance = d;
      best.index = i;
    }
  }
  return best;
}

}  // namespace geostat
