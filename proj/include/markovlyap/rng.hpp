#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace markovlyap {

// SplitMix64: counter-based 64-bit generator. Output k of a stream seeded
// with s is mix64(s + (k+1)*GAMMA), so state is a single word and streams
// can be derived without touching each other.
//
// Stream derivation rule (used by every parallel sampler in this library):
//   seed of trajectory t = derive_stream(master_seed, t)
// which decorrelates substreams regardless of thread scheduling. All
// floating-point draws below are built from raw 64-bit words, never from
// std::uniform_*_distribution, so sequences are identical across platforms.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix64(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in (0, 1]; safe as a log() argument.
    double next_unit_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    // Standard normal via Box-Muller on our own uniforms (second value cached).
    double next_normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = next_unit_open();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

    // Index sampled from a probability row by inverse-CDF scan. The row is
    // assumed nonnegative with sum 1 (within 1e-12); the final index absorbs
    // any rounding remainder.
    std::size_t next_index(std::span<const double> probabilities) {
        const double u = next_unit();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
            acc += probabilities[i];
            if (u < acc) return i;
        }
        return probabilities.empty() ? 0 : probabilities.size() - 1;
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Decorrelated substream seed for (master, index).
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return SplitMix64::mix64(master + (index + 1) * SplitMix64::kGamma);
}

}  // namespace markovlyap
