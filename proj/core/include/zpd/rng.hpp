#pragma once

#include <cstdint>

namespace zpd {

/// Deterministic, platform-independent RNG (splitmix64). Reports must be
/// byte-identical for a fixed seed, so we avoid std:: distributions whose
/// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~0ULL) / n);
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [-box, box].
  long long boxed(int box) {
    return static_cast<long long>(below(2 * static_cast<std::uint64_t>(box) + 1)) - box;
  }

 private:
  std::uint64_t state_;
};

}  // namespace zpd
