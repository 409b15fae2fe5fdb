#include "disklev/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "disklev/rng.hpp"

namespace disklev {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kChunk = 1 << 16;  // fixed work unit; partition never depends on thread count

void require_level(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("level t must lie in [0, 1]");
}

int resolve_threads(int threads, long long n_chunks) {
    int hw = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    return static_cast<int>(std::min<long long>(hw, n_chunks));
}

// Runs fn(chunk_begin, chunk_end) over [0, n) in fixed chunks. Each worker
// takes chunks by stride, so the set of (begin, end) pairs is independent of
// the worker count.
template <typename Fn>
void for_each_chunk(long long n, int threads, Fn&& fn) {
    const long long n_chunks = (n + kChunk - 1) / kChunk;
    const int n_workers = resolve_threads(threads, n_chunks);
    if (n_workers <= 1) {
        for (long long c = 0; c < n_chunks; ++c) {
            fn(c * kChunk, std::min(n, (c + 1) * kChunk));
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&, w] {
            for (long long c = w; c < n_chunks; c += n_workers) {
                fn(c * kChunk, std::min(n, (c + 1) * kChunk));
            }
        });
    }
    for (auto& th : pool) th.join();
}

AreaEstimate exact_constant(double value, AreaMethod method) {
    AreaEstimate est;
    est.value = value;
    est.std_error = 0.0;
    est.method = method;
    est.samples = 0;
    if (method == AreaMethod::grid) est.bracket = AreaBracket{value, value};
    return est;
}

AreaEstimate mc_estimate_from_count(long long hits, long long n) {
    const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
    AreaEstimate est;
    est.method = AreaMethod::monte_carlo;
    est.samples = n;
    est.value = kPi * p_hat;
    est.std_error = kPi * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
    return est;
}

}  // namespace

std::string_view to_string(AreaMethod m) {
    return m == AreaMethod::monte_carlo ? "monte_carlo" : "grid";
}

AreaEstimate sublevel_area_mc(const DiskMap& map, double t, long long n, std::uint64_t seed,
                              int threads) {
    require_level(t);
    if (n < 1000) throw std::invalid_argument("sublevel_area_mc: need n >= 1000 samples");
    if (t == 0.0) return exact_constant(0.0, AreaMethod::monte_carlo);
    if (t == 1.0) return exact_constant(kPi, AreaMethod::monte_carlo);

    const CounterRng rng(seed);
    const long long n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<long long> chunk_hits(static_cast<std::size_t>(n_chunks), 0);
    for_each_chunk(n, threads, [&](long long begin, long long end) {
        long long hits = 0;
        for (long long i = begin; i < end; ++i) {
            if (map.modulus(disk_sample(rng, static_cast<std::uint64_t>(i))) < t) ++hits;
        }
        chunk_hits[static_cast<std::size_t>(begin / kChunk)] = hits;
    });
    long long hits = 0;
    for (long long h : chunk_hits) hits += h;
    return mc_estimate_from_count(hits, n);
}

AreaEstimate sublevel_area_grid(const DiskMap& map, double t, int resolution) {
    require_level(t);
    if (resolution < 64) throw std::invalid_argument("sublevel_area_grid: resolution must be >= 64");
    if (t == 0.0) return exact_constant(0.0, AreaMethod::grid);
    if (t == 1.0) return exact_constant(kPi, AreaMethod::grid);

    const int n = resolution;
    const double dx = 2.0 / n;
    const double pixel_area = dx * dx;

    // Corner rows are shared between adjacent pixel rows; keep two at a time.
    // corner_state: 0 = outside disk, 1 = inside with |f| < t, 2 = inside with |f| >= t.
    auto corner_row = [&](int iy, std::vector<unsigned char>& row) {
        const double y = -1.0 + iy * dx;
        for (int ix = 0; ix <= n; ++ix) {
            const double x = -1.0 + ix * dx;
            if (x * x + y * y >= 1.0) {
                row[static_cast<std::size_t>(ix)] = 0;
            } else {
                row[static_cast<std::size_t>(ix)] =
                    map.modulus(Complex{x, y}) < t ? 1 : 2;
            }
        }
    };

    std::vector<unsigned char> below(static_cast<std::size_t>(n + 1));
    std::vector<unsigned char> above(static_cast<std::size_t>(n + 1));
    corner_row(0, below);

    long long set_count = 0, interior_count = 0, touching_unset_count = 0;
    for (int iy = 0; iy < n; ++iy) {
        corner_row(iy + 1, above);
        const double yc = -1.0 + (iy + 0.5) * dx;
        for (int ix = 0; ix < n; ++ix) {
            const unsigned char c00 = below[static_cast<std::size_t>(ix)];
            const unsigned char c10 = below[static_cast<std::size_t>(ix + 1)];
            const unsigned char c01 = above[static_cast<std::size_t>(ix)];
            const unsigned char c11 = above[static_cast<std::size_t>(ix + 1)];
            const bool corners_agree = (c00 == c10 && c00 == c01 && c00 == c11);
            if (corners_agree && c00 == 0) continue;  // fully outside the disk

            const double xc = -1.0 + (ix + 0.5) * dx;
            const bool center_in = xc * xc + yc * yc < 1.0;
            const bool set = center_in && map.modulus(Complex{xc, yc}) < t;

            if (set) {
                ++set_count;
                if (corners_agree && c00 == 1) ++interior_count;
            } else if (!corners_agree) {
                ++touching_unset_count;
            }
        }
        std::swap(below, above);
    }

    AreaEstimate est;
    est.method = AreaMethod::grid;
    est.samples = static_cast<long long>(n) * n;
    est.value = pixel_area * static_cast<double>(set_count);
    est.std_error = 0.0;
    est.bracket = AreaBracket{pixel_area * static_cast<double>(interior_count),
                              pixel_area * static_cast<double>(set_count + touching_unset_count)};
    return est;
}

AreaEstimate sublevel_area(const DiskMap& map, double t, const EstimatorConfig& config) {
    if (config.method == AreaMethod::grid) return sublevel_area_grid(map, t, config.resolution);
    return sublevel_area_mc(map, t, config.samples, config.seed, config.threads);
}

AreaEstimate superlevel_area(const DiskMap& map, double t, const EstimatorConfig& config) {
    AreaEstimate sub = sublevel_area(map, t, config);
    AreaEstimate sup = sub;
    sup.value = kPi - sub.value;
    if (sub.bracket) sup.bracket = AreaBracket{kPi - sub.bracket->upper, kPi - sub.bracket->lower};
    return sup;
}

ModulusSample ModulusSample::monte_carlo(const DiskMap& map, long long n, std::uint64_t seed,
                                         int threads) {
    if (n < 1000) throw std::invalid_argument("ModulusSample: need n >= 1000 samples");
    ModulusSample sample;
    sample.seed_ = seed;
    sample.moduli_.resize(static_cast<std::size_t>(n));
    const CounterRng rng(seed);
    for_each_chunk(n, threads, [&](long long begin, long long end) {
        for (long long i = begin; i < end; ++i) {
            sample.moduli_[static_cast<std::size_t>(i)] =
                map.modulus(disk_sample(rng, static_cast<std::uint64_t>(i)));
        }
    });
    std::sort(sample.moduli_.begin(), sample.moduli_.end());
    return sample;
}

AreaEstimate ModulusSample::sublevel(double t) const {
    require_level(t);
    if (t == 0.0) return exact_constant(0.0, AreaMethod::monte_carlo);
    if (t == 1.0) return exact_constant(kPi, AreaMethod::monte_carlo);
    const long long hits =
        std::lower_bound(moduli_.begin(), moduli_.end(), t) - moduli_.begin();
    return mc_estimate_from_count(hits, size());
}

AreaEstimate ModulusSample::superlevel(double t) const {
    AreaEstimate sub = sublevel(t);
    sub.value = kPi - sub.value;  // same samples: complement is exact
    return sub;
}

std::pair<double, double> ModulusSample::integral_pow(double p) const {
    const double n = static_cast<double>(size());
    double sum = 0.0, sum_sq = 0.0;
    for (double m : moduli_) {
        const double mp = std::pow(m, p);
        sum += mp;
        sum_sq += mp * mp;
    }
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {kPi * mean, kPi * std::sqrt(var / n)};
}

}  // namespace disklev
