#pragma once

#include <cstdint>

namespace soenet {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// SplitMix64 counter stream. Output i of the stream keyed by
/// (seed, level, stream) is mix(key + (i+1) * golden), which is identical on
/// every platform. Streams for different keys are independent for all
/// practical purposes.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t level, std::uint64_t stream)
      : key_(splitmix64_mix(splitmix64_mix(seed ^ 0x5DEECE66Dull) ^ splitmix64_mix((level << 40) ^ stream))) {}

  std::uint64_t next() {
    counter_ += kGolden;
    return splitmix64_mix(key_ + counter_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace soenet
