#ifndef COOP_RNG_HPP
#define COOP_RNG_HPP

#include <cstdint>

namespace coop {

/// SplitMix64 stream. Small, fast and fully specified here, so sampled
/// results and generated games are reproducible across platforms and
/// standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) via 32-bit multiply-shift.
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(((next() >> 32) * bound) >> 32);
    }

    /// Uniform draw in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Derives the seed of stream `index` from a base seed. Counter-based, so
/// stream k can be opened without generating streams 0..k-1 and results do
/// not depend on how work is partitioned.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace coop

#endif // COOP_RNG_HPP
