#pragma once

#include <cstdint>
#include <random>

#include "ncqm/vec2.hpp"

namespace ncqm {

/// Seeded deterministic sampler. All randomized checks draw components
/// uniformly from [-2, 2] so residuals stay comparable across suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = -2.0, double hi = 2.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  Vec2 vec2(double lo = -2.0, double hi = 2.0) { return {uniform(lo, hi), uniform(lo, hi)}; }
  int integer(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ncqm
