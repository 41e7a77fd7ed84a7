// prng.hpp — deterministic pseudo-random generator used everywhere randomness
// is needed (graph sampling, shuffles, start-vector offsets). SplitMix64:
// fixed algorithm, identical output on every platform, seed is the full state.
#pragma once

#include <cstdint>

namespace whc {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); bound > 0. Rejection keeps it exactly uniform.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Stream derivation: independent-looking generator for (seed, index) pairs,
    // so that sample i does not depend on how samples are partitioned.
    static SplitMix64 for_index(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace whc
