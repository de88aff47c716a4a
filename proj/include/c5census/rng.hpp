#pragma once

#include <cstdint>

namespace c5census {

// SplitMix64 keyed by (seed, stream). Every randomized routine in the
// library takes a seed and a stream id and derives its state through this
// generator only, so outputs are identical across platforms and across
// thread counts. The mixing function is the standard splitmix64 finalizer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ mix(stream + kGamma))) {}

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform01() {  // 53-bit mantissa in [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace c5census
