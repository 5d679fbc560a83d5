#pragma once

#include <array>
#include <cstdint>

namespace geostat {

// Three-dimensional Sobol sequence with Gray-code stepping and a fixed
// digital XOR shift per instance (scrambling for replicated error bars).
class Sobol3 {
 public:
  explicit Sobol3(std::uint64_t scramble_seed = 0);

  std::array<double, 3> next();
  void skip(std::uint64_t count);

 private:
  static constexpr int kBits = 52;
  std::uint64_t v_[3][kBits];
  std::uint64_t state_[3] = {0, 0, 0};
  std::uint64_t shift_[3] = {0, 0, 0};
  std::uint64_t index_ = 0;
};

}  // namespace geostat
