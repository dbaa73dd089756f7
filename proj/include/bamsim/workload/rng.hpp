#pragma once

#include <cmath>
#include <cstdint>

#include "bamsim/core/fixed_point.hpp"

namespace bamsim {

/// SplitMix64 (Steele, Lea & Flood 2014; the java.util.SplittableRandom
/// mixer). State advances by the 64-bit golden-ratio increment and each
/// output is a finalized mix of the new state, so the full transition is
/// documented by these few lines; traces regenerate bit-identically from a
/// seed on any platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1]; 53 significant bits, never zero.
    double next_unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool operator==(const SplitMix64&) const = default;

private:
    std::uint64_t state_;
};

/// Inverse-CDF exponential variate: -mean * ln(u) for u in (0, 1].
inline double exponential_from_unit(double u, double mean_s) { return -mean_s * std::log(u); }

/// Exponential holding/interarrival sample in seconds; advances the stream.
inline double sample_exponential(SplitMix64& rng, double mean_s) {
    return exponential_from_unit(rng.next_unit(), mean_s);
}

/// Uniform bandwidth on [lo, hi], quantized to 0.1 Mbps; advances the stream.
inline Bandwidth sample_uniform(SplitMix64& rng, Bandwidth lo, Bandwidth hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi.ticks() - lo.ticks()) + 1;
    return Bandwidth::from_ticks(lo.ticks() + static_cast<std::int64_t>(rng.next_below(span)));
}

}  // namespace bamsim
