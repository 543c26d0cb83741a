#ifndef PALIN_RNG_HPP
#define PALIN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace palin {

// Counter-based generator (splitmix64): the state advances by a fixed
// increment and the output is a hash of it, so streams are reproducible
// bit-for-bit across platforms from the explicit 64-bit seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1); never returns 0.
    double next_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (two uniforms per call, no caching,
    /// so the draw sequence stays easy to document).
    double next_gaussian() {
        const double u = next_open();
        const double v = next_double();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

private:
    std::uint64_t state_;
};

} // namespace palin

#endif
