#pragma once

/**
 * @file prng.hpp
 * @brief Deterministic 64-bit generator (splitmix64).
 *
 * All sampling in the library flows through this generator so that any
 * run is reproducible, bit for bit, from a single seed. The state
 * advance and output mix are the standard splitmix64 constants.
 */

#include <cstdint>

namespace jordanip {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Integer in [-bound, bound]. Modulo reduction; the slight bias is
    /// irrelevant here, determinism is what matters.
    long next_int(long bound) {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(next() % span) - bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace jordanip
