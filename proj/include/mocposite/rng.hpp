#pragma once

#include <cstdint>
#include <random>

#include "mocposite/complex_core.hpp"

namespace mocposite {

// Deterministic uniform generator.  mt19937_64 with explicit bit-to-double
// conversion so that seeded sequences are identical across platforms
// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    double im = uniform(im_lo, im_hi);
    return Complex(re, im);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mocposite
