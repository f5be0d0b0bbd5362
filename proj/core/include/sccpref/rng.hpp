#pragma once

#include <cstdint>
#include <string_view>

namespace sccpref {

// SplitMix64 (Steele, Lea, Flood 2014). Corpus manifests name it by
// kAlgorithm.
class SplitMix64 {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64";

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection of the biased low range. bound > 0.
  constexpr std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr bool bernoulli(double p) { return unit() < p; }

  // Independent child stream seeded from this one.
  constexpr SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace sccpref
