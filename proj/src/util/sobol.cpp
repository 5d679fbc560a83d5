#include "geostat/util/sobol.hpp"

#include <bit>

#include "geostat/util/rng.hpp"

namespace geostat {

namespace {
// Primitive polynomial degrees, encodings and initial direction seeds for
// dimensions 2 and 3 (dimension 1 is the van der Corput sequence).
constexpr int kDeg[2] = {2, 3};
constexpr unsigned kPoly[2] = {1, 1};
constexpr unsigned kInit[2][3] = {{1, 3, 0}, {1, 3, 1}};
}  // namespace

Sobol3::Sobol3(std::uint64_t scramble_seed) {
  // Dimension 0: v_j = 2^{-(j+1)} in fixed point.
  for (int j = 0; j < kBits; ++j) v_[0][j] = 1ULL << (kBits - 1 - j);

  for (int d = 0; d < 2; ++d) {
    const int deg = kDeg[d];
    for (int j = 0; j < deg; ++j) v_[d + 1][j] = std::uint64_t(kInit[d][j]) << (kBits - 1 - j);
    for (int j = deg; j < kBits; ++j) {
      std::uint64_t val = v_[d + 1][j - deg] ^ (v_[d + 1][j - deg] >> deg);
      unsigned poly = kPoly[d];
      for (int k = 1; k < deg; ++k) {
        if (poly & 1u) val ^= v_[d + 1][j - k];
        poly >>= 1;
      }
      v_[d + 1][j] = val;
    }
  }

  if (scramble_seed != 0) {
    std::uint64_t sm = scramble_seed;
    for (auto& s : shift_) s = splitmix64(sm) >> (64 - kBits);
  }
  for (int d = 0; d < 3; ++d) state_[d] = shift_[d];
}

std::array<double, 3> Sobol3::next() {
  constexpr double kScale = 1.0 / 4503599627370496.0;  // 2^-52
  const std::array<double, 3> out = {state_[0] * kScale, state_[1] * kScale, state_[2] * kScale};
  const int c = std::countr_zero(~index_);  // Gray-code: lowest zero bit of index
  for (int d = 0; d < 3; ++d) state_[d] ^= v_[d][c];
  ++index_;
  return out;
}

void Sobol3::skip(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) next();
}

}  // namespace geostat
