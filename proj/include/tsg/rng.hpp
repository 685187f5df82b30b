#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tsg {

// Deterministic random source.  The engine is std::mt19937_64, but all
// variate transforms are spelled out here so that a given seed produces the
// same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on (0, 1]; never returns 0 so log() stays finite.
  double uniform01() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  // Standard normal via Box-Muller; two uniforms per draw, no carried state.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tsg
