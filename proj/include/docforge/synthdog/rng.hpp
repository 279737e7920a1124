#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace docforge::synthdog {

/// splitmix64 finalizer; good avalanche for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-image seed from the master seed: images are independent streams, so a
/// worker can plan image k without consuming the RNG state of images < k.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0x51ED2701FB7D0C92ULL));
}

/// mt19937_64 with hand-rolled distributions. The standard distribution
/// objects are not bit-identical across library implementations; these are,
/// which keeps plans reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  /// Inclusive [lo, hi].
  int uniform_int(int lo, int hi) {
    if (hi <= lo) {
      return lo;
    }
    const std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
    return lo + int(engine_() % span);
  }

  /// [lo, hi)
  double uniform_real(double lo, double hi) {
    const double unit = double(engine_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
  }

  double normal(double mean, double stddev) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    // Box-Muller; u1 in (0, 1] so the log is finite.
    const double u1 = (double(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = double(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return mean + stddev * radius * std::cos(angle);
  }

  bool bernoulli(double p) { return uniform_real(0.0, 1.0) < p; }

  /// Index in [0, n); n must be positive.
  std::size_t pick(std::size_t n) { return std::size_t(engine_() % n); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace docforge::synthdog
