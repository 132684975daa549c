#pragma once

#include <cstdint>

namespace degdiam {

/// SplitMix64 (Steele, Lea, Vigna). Chosen over std::mt19937 because the
/// output stream is fully specified by the algorithm, so seeded runs are
/// reproducible across platforms and standard library implementations.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection. Unbiased for every bound.
    constexpr std::uint64_t next_below(std::uint64_t bound) {
        // Rejection zone keeps the accepted range an exact multiple of bound.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Independent stream for one trial of a seeded batch. Trials get
    /// decorrelated states even for adjacent (seed, trial) pairs.
    static constexpr SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
        SplitMix64 mixer(seed ^ (trial * 0x9e3779b97f4a7c15ULL));
        SplitMix64 out(mixer.next());
        return out;
    }

private:
    std::uint64_t state_;
};

}  // namespace degdiam
