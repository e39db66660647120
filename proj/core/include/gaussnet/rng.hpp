#pragma once

#include <cstdint>
#include <random>

namespace gaussnet {

/// Seeded RNG wrapper. All randomness in the library flows through explicit
/// seeds so every result is reproducible; uniform doubles are generated from
/// the top 53 bits of mt19937_64 to stay bit-stable across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Derive a statistically independent stream for substream `index`.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 finalizer over the pair
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace gaussnet
