#pragma once

#include <cstdint>

namespace qsearch {

/// Explicitly seeded deterministic random stream (splitmix64).
///
/// Parallel trials each derive their own stream with `substream(seed, i)`,
/// so results do not depend on scheduling.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53 bits of entropy.
    double next_double();

    /// Independent stream for trial `index` under a master seed.
    static RandomSource substream(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

}  // namespace qsearch
