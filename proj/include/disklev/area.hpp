#ifndef DISKLEV_AREA_HPP
#define DISKLEV_AREA_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "disklev/disk_map.hpp"

namespace disklev {

enum class AreaMethod { monte_carlo, grid };

std::string_view to_string(AreaMethod m);

struct AreaBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Area of a level region, in absolute units (full disk = pi). Monte Carlo
/// estimates carry one standard error; grid estimates carry a certified
/// pixel-counting bracket instead.
struct AreaEstimate {
    double value = 0.0;
    double std_error = 0.0;  // serialized as "stderr"
    AreaMethod method = AreaMethod::monte_carlo;
    long long samples = 0;
    std::optional<AreaBracket> bracket;
};

struct EstimatorConfig {
    AreaMethod method = AreaMethod::monte_carlo;
    long long samples = 1'000'000;  // monte_carlo
    std::uint64_t seed = 0;         // monte_carlo
    int resolution = 1024;          // grid
    int threads = 0;                // 0 = hardware concurrency; result is thread-count independent
};

/// |{z in D : |f(z)| < t}| from n uniform disk samples of the counter-based
/// stream `seed`. Deterministic for fixed (seed, n) whatever the thread
/// count. t = 0 and t = 1 return the exact constants 0 and pi.
AreaEstimate sublevel_area_mc(const DiskMap& map, double t, long long n, std::uint64_t seed,
                              int threads = 0);

/// Pixel-center count on an n x n grid over [-1,1]^2, with a bracket from
/// corner classification: a pixel is boundary-touching when its corners
/// disagree on disk membership or on the sublevel test.
AreaEstimate sublevel_area_grid(const DiskMap& map, double t, int resolution);

AreaEstimate sublevel_area(const DiskMap& map, double t, const EstimatorConfig& config);

/// pi minus the sublevel estimate (level curves have zero area for the
/// supported map families); brackets and errors are carried over.
AreaEstimate superlevel_area(const DiskMap& map, double t, const EstimatorConfig& config);

/// Moduli of one fixed Monte Carlo sample set, sorted ascending. Reusing it
/// across levels t makes a sweep cost one sampling pass and keeps the
/// estimates internally consistent (sub- and superlevel sum to pi exactly).
class ModulusSample {
public:
    static ModulusSample monte_carlo(const DiskMap& map, long long n, std::uint64_t seed,
                                     int threads = 0);

    AreaEstimate sublevel(double t) const;
    AreaEstimate superlevel(double t) const;

    long long size() const { return static_cast<long long>(moduli_.size()); }
    std::uint64_t seed() const { return seed_; }
    const std::vector<double>& sorted_moduli() const { return moduli_; }

    /// Monte Carlo estimate of the integral of |f|^p over the disk and its
    /// standard error.
    std::pair<double, double> integral_pow(double p) const;

private:
    std::vector<double> moduli_;  // ascending
    std::uint64_t seed_ = 0;
};

}  // namespace disklev

#endif
