#pragma once

#include <cstdint>

namespace sweep {

/// One splitmix64 step: advances `state` and returns the next output.
/// Used to condition raw seeds and to derive independent substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xorshift64* with a splitmix64-conditioned seed. A fixed, documented
/// generator rather than std::mt19937 + distributions, because the
/// standard distributions are not bit-reproducible across library
/// implementations and fixtures must be portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        state_ = splitmix64(s);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;  // xorshift state must never be zero
    }

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform draw from {0, ..., bound-1} via the high bits of a
    /// 128-bit product (bias below 2^-32, irrelevant at our scales).
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace sweep
