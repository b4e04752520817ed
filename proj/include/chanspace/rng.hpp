#pragma once

#include <cstdint>

namespace chanspace {

// SplitMix64 (Steele, Lea, Flood 2014; public domain reference mixing
// function). Chosen for bit-reproducible output on every platform and for
// cheap sub-stream derivation: stream k of a seed is
// SplitMix64(SplitMix64::derive(seed, k)), so per-instance and per-sample
// streams do not depend on worker partitioning.
//
// Reports identify it as "splitmix64".
class SplitMix64 {
public:
    static constexpr const char* kAlgorithm = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Value in [low, high], inclusive.
    std::uint64_t between(std::uint64_t low, std::uint64_t high) {
        return low + below(high - low + 1);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Sub-stream seed for counter `index` under `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0xA3EC647659359ACDULL + index * 0x9E3779B97F4A7C15ULL));
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace chanspace
