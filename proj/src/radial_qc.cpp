#include "disklev/radial_qc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "disklev/complex_point.hpp"

namespace disklev {

namespace {

constexpr double kRadialCutoff = 1e-8;  // table covers [cutoff, 1]
constexpr double kDiskSlack = 1e-9;
constexpr double kInverseTolerance = 1e-12;

}  // namespace

DensitySpec::DensitySpec(std::vector<double> h_values) : h_(std::move(h_values)) {
    if (h_.size() < 2) {
        throw std::invalid_argument("density needs at least two samples");
    }
    for (double v : h_) {
        require_finite(v, "density sample");
        if (v < 0.0) {
            throw std::invalid_argument("density samples must be nonnegative");
        }
    }
    cumulative_.resize(h_.size());
    cumulative_[0] = 0.0;
    const double dv = 1.0 / static_cast<double>(h_.size() - 1);
    for (std::size_t i = 1; i < h_.size(); ++i) {
        cumulative_[i] = cumulative_[i - 1] + 0.5 * (h_[i - 1] + h_[i]) * dv;
    }
}

DensitySpec DensitySpec::constant(double h) { return DensitySpec(std::vector<double>{h, h}); }

DensitySpec DensitySpec::from_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open density file: " + path.string());
    }
    std::vector<double> vs;
    std::vector<double> hs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double v = 0.0;
        double h = 0.0;
        if (!(row >> v >> h)) {
            if (vs.empty()) {
                continue;  // header row
            }
            throw std::invalid_argument("malformed density row: " + line);
        }
        vs.push_back(v);
        hs.push_back(h);
    }
    if (vs.size() < 2) {
        throw std::invalid_argument("density file needs at least two rows");
    }
    const double dv = 1.0 / static_cast<double>(vs.size() - 1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (std::abs(vs[i] - static_cast<double>(i) * dv) > 1e-9) {
            throw std::invalid_argument("density grid must be uniform over [0, 1]");
        }
    }
    return DensitySpec(std::move(hs));
}

double DensitySpec::operator()(double v) const {
    require_finite(v, "density argument");
    if (v < -1e-12 || v > 1.0 + 1e-12) {
        throw std::invalid_argument("density argument outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
    const double pos = v * static_cast<double>(h_.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(pos), h_.size() - 2);
    const double frac = pos - static_cast<double>(k);
    return h_[k] + (h_[k + 1] - h_[k]) * frac;
}

double DensitySpec::integral_from(double u) const {
    require_finite(u, "density argument");
    if (u < -1e-12 || u > 1.0 + 1e-12) {
        throw std::invalid_argument("density argument outside [0, 1]");
    }
    u = std::clamp(u, 0.0, 1.0);
    const double dv = 1.0 / static_cast<double>(h_.size() - 1);
    const double pos = u * static_cast<double>(h_.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(pos), h_.size() - 2);
    const double v_k = static_cast<double>(k) * dv;
    const double below = cumulative_[k] + 0.5 * (h_[k] + (*this)(u)) * (u - v_k);
    return cumulative_.back() - below;
}

RadialQCMap RadialQCMap::build(double a, std::optional<double> dilatation, DensitySpec density,
                               int grid_size) {
    require_finite(a, "exponent");
    if (a <= 0.0) {
        throw std::invalid_argument("exponent must be positive");
    }
    if (grid_size < 256) {
        throw std::invalid_argument("grid size must be at least 256");
    }
    const double k = dilatation.value_or(a);
    require_finite(k, "dilatation");
    if (k < a) {
        throw std::invalid_argument("dilatation below the exponent");
    }
    if (density.integral() >= 4.0 * a) {
        throw std::invalid_argument("inadmissible density: integral must stay below 4a");
    }
    RadialQCMap map(a, k, std::move(density));
    const std::size_t nodes = static_cast<std::size_t>(std::max(8 * grid_size, 32768)) + 1;
    map.w0_ = std::log(kRadialCutoff);
    map.dw_ = -map.w0_ / static_cast<double>(nodes - 1);
    map.log_g_.resize(nodes);

    // log g(s) = a log s + C(s) with C(s) = integral over [log s, 0] of
    // H(e^w) dw; the singular a/u part integrates in closed form and the
    // remainder is smooth, so cumulative trapezoid from the top suffices.
    std::vector<double> c(nodes);
    c[nodes - 1] = 0.0;
    double phi_hi = map.density_.integral_from(1.0) / 4.0;
    for (std::size_t j = nodes - 1; j-- > 0;) {
        const double w = map.w0_ + static_cast<double>(j) * map.dw_;
        const double phi_lo = map.density_.integral_from(std::exp(w)) / 4.0;
        c[j] = c[j + 1] + 0.5 * (phi_lo + phi_hi) * map.dw_;
        phi_hi = phi_lo;
    }
    for (std::size_t j = 0; j < nodes; ++j) {
        const double w = (j == nodes - 1) ? 0.0 : map.w0_ + static_cast<double>(j) * map.dw_;
        map.log_g_[j] = a * w + c[j];
    }
    return map;
}

RadialQCMap::RadialQCMap(double a, double dilatation, DensitySpec density)
    : a_(a), dilatation_(dilatation), density_(std::move(density)) {}

double RadialQCMap::table_r(std::size_t j) const {
    if (j + 1 == log_g_.size()) {
        return 1.0;
    }
    return std::exp(w0_ + static_cast<double>(j) * dw_);
}

double RadialQCMap::log_g_at(double w) const {
    if (w >= 0.0) {
        return 0.0;
    }
    if (w < w0_) {
        // Below the cutoff the slope of log g in log r is a - H(u) with H
        // frozen at its cutoff value; H varies by at most h_max * cutoff / 4
        // down there, so the extension is accurate to that order.
        const double slope = a_ - density_.integral_from(kRadialCutoff) / 4.0;
        return log_g_.front() + slope * (w - w0_);
    }
    const double pos = (w - w0_) / dw_;
    const auto j = std::min(static_cast<std::size_t>(pos), log_g_.size() - 2);
    const double frac = pos - static_cast<double>(j);
    return log_g_[j] + (log_g_[j + 1] - log_g_[j]) * frac;
}

double RadialQCMap::g(double r) const {
    require_finite(r, "radius");
    if (r < 0.0) {
        throw std::invalid_argument("radius must be nonnegative");
    }
    if (r == 0.0) {
        return 0.0;
    }
    if (r >= 1.0) {
        return 1.0;
    }
    return std::exp(log_g_at(std::log(r)));
}

double RadialQCMap::g_inverse(double t) const {
    require_finite(t, "level");
    if (t < 0.0 || t > 1.0) {
        throw std::invalid_argument("level outside [0, 1]");
    }
    if (t == 0.0) {
        return 0.0;
    }
    if (t >= 1.0) {
        return 1.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > kInverseTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < t) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Complex RadialQCMap::eval(Complex z) const {
    require_finite(z, "map argument");
    const double r = std::abs(z);
    if (r > 1.0 + kDiskSlack) {
        throw std::domain_error("point outside the closed unit disk");
    }
    if (r == 0.0) {
        return Complex(0.0, 0.0);
    }
    return z * (g(std::min(r, 1.0)) / r);
}

double RadialQCMap::max_log_slope() const {
    double best = 0.0;
    for (std::size_t j = 0; j + 1 < log_g_.size(); ++j) {
        best = std::max(best, (log_g_[j + 1] - log_g_[j]) / dw_);
    }
    return best;
}

double RadialQCMap::max_laplacian_residual(std::span<const double> r_probes, double step) const {
    require_finite(step, "step");
    if (step <= 0.0 || step > 1e-3) {
        throw std::invalid_argument("step must lie in (0, 1e-3]");
    }
    const auto stride =
        std::max<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(std::llround(step / dw_)));
    double worst = 0.0;
    for (double r : r_probes) {
        require_finite(r, "probe");
        if (r <= 0.05 || r >= 0.95) {
            throw std::invalid_argument("probes must lie in (0.05, 0.95)");
        }
        const auto j = static_cast<std::ptrdiff_t>(std::llround((std::log(r) - w0_) / dw_));
        const double r_j = table_r(static_cast<std::size_t>(j));
        const double second = (log_g_[j + stride] - 2.0 * log_g_[j] + log_g_[j - stride]) /
                              ((static_cast<double>(stride) * dw_) * (static_cast<double>(stride) * dw_));
        // laplacian(log g) at r equals d^2/dw^2 of log g(e^w) divided by r^2;
        // the density relation reads 4r * laplacian = h(r).
        const double residual = std::abs(4.0 * second / r_j - density_(r_j));
        worst = std::max(worst, residual);
    }
    return worst;
}

void RadialQCMap::export_table_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write table file: " + path.string());
    }
    out << "r,g\n";
    char buffer[80];
    for (std::size_t j = 0; j < log_g_.size(); ++j) {
        std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g\n", table_r(j), table_g(j));
        out << buffer;
    }
    if (!out) {
        throw std::runtime_error("failed writing table file: " + path.string());
    }
}

}  // namespace disklev
