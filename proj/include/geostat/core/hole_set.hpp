#pragma once

#include <string>
#include <vector>

#include "geostat/error.hpp"
#include "geostat/util/vec3.hpp"

namespace geostat {

// One puncture of the manifold: position and the two harmonic weights.
struct Hole {
  Vec3 p;
  double alpha = 0.0;
  double beta = 0.0;

  double mass_parameter() const { return alpha + beta; }
};

struct HoleSet {
  std::vector<Hole> holes;
  // Brill-Lindquist case: every beta strictly positive.  beta = 0 is allowed
  // only with the flag unset (extreme Reissner-Nordstrom data).
  bool strict_beta = true;

  int size() const { return static_cast<int>(holes.size()); }
  const Hole& operator[](int i) const { return holes[static_cast<std::size_t>(i)]; }
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string describe() const;
};

// Checks every invariant and reports all violations, not just the first.
ValidationResult validate(const HoleSet& set);

// validate() + throw Error carrying the full issue list on failure.
HoleSet validated(HoleSet set);

// Tolerance below which a point is considered to sit on a hole.
double hole_coincidence_tolerance(const Vec3& p);

// Index of the hole nearest to x and its distance.
struct NearestHole {
  int index = -1;
  double distance = 0.0;
};
NearestHole nearest_hole(const HoleSet& set, const Vec3& x);

}  // namespace geostat
