#pragma once

#include <cstdint>

namespace polyratio {

/// splitmix64: the 64-bit mixing generator of Steele, Lea and Flood.
/// Used everywhere a seedable stream is needed; streams derived with
/// derive_stream() are independent of evaluation order, which keeps the
/// parallel kernels deterministic.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return n ? next() % n : 0; }
};

/// Stateless stream derivation: mixes (seed, stream index) into a fresh seed.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream)
{
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
    return g.next();
}

inline constexpr const char* kRngName = "splitmix64";

} // namespace polyratio
