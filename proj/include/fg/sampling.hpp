#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace fg {

/// Counter-based sampling: every draw is a pure function of (seed, index),
/// so streams are random-access and safe to evaluate concurrently.
struct SampleKey {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

/// Engine seeded from a SampleKey. std::seed_seq and std::mt19937_64 are
/// fully specified, so draws agree across platforms.
class Sampler {
 public:
  explicit Sampler(SampleKey key) {
    std::seed_seq seq{static_cast<std::uint32_t>(key.seed), static_cast<std::uint32_t>(key.seed >> 32),
                      static_cast<std::uint32_t>(key.index), static_cast<std::uint32_t>(key.index >> 32)};
    engine_.seed(seq);
  }

  /// Exact uniform draw in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - kMax % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
      x = engine_();
    }
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fg
