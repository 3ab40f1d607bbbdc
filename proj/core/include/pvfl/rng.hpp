/**
 * @file rng.hpp
 * @brief Counter-based SplitMix64 generator
 *
 * Value i of stream `seed` is the SplitMix64 finalizer applied to
 * seed + (i + 1) * 0x9E3779B97F4A7C15 (Steele, Lea & Flood 2014). This is
 * exactly the sequence a sequential SplitMix64 seeded with `seed` produces,
 * but any index can be evaluated directly, so draws are reproducible
 * bit-for-bit on any platform and can be split across threads.
 */

#pragma once

#include <cstdint>

namespace pvfl {

class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    constexpr std::uint64_t seed() const noexcept { return seed_; }

    constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
        std::uint64_t z = seed_ + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t index) const noexcept {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe to take the log of.
    constexpr double uniform_open_zero(std::uint64_t index) const noexcept {
        return static_cast<double>((bits(index) >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
};

}  // namespace pvfl
