#pragma once

#include <cstdint>

namespace cyclespec {

/// SplitMix64. State advances by 0x9E3779B97F4A7C15 per draw; the output is
/// the standard xor-shift/multiply finaliser of the new state. Chosen so any
/// language can reproduce generated graphs bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Top 53 bits scaled into [0, 1).
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) noexcept { return uniform01() < p; }

    /// Uniform in [0, bound) by rejection of the biased low range.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace cyclespec
