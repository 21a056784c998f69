#pragma once

#include <cstdint>
#include <random>

namespace websym {

/// Deterministic uniform doubles in [0,1): the raw mt19937_64 stream is
/// mapped to doubles by hand because std::uniform_real_distribution is
/// implementation-defined and would break byte-identical output.
class DetRand {
 public:
  explicit DetRand(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::uint64_t bits() { return rng_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace websym
