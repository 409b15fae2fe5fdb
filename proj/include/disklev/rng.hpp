#ifndef DISKLEV_RNG_HPP
#define DISKLEV_RNG_HPP

#include <cstdint>
#include <string_view>

#include "disklev/complex_point.hpp"

namespace disklev {

/// Name of the generator, recorded in report metadata.
inline constexpr std::string_view kRngName = "splitmix64";

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based stream: draw i is a pure function of (seed, i), so any
// partition of the index space yields the same values.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t index) const {
        return mix64(seed_ ^ (index * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    }

    /// Uniform double in [0, 1) at stream position `index`.
    double uniform01(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

/// Uniform point of the open unit disk, sample number `i` of the stream.
/// Polar inverse CDF: r = sqrt(u), theta = 2*pi*v.
inline Complex disk_sample(const CounterRng& rng, std::uint64_t i) {
    const double u = rng.uniform01(2 * i);
    const double v = rng.uniform01(2 * i + 1);
    const double r = std::sqrt(u);
    const double theta = 6.283185307179586476925286766559 * v;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace disklev

#endif
