#include "disklev/winding.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace disklev {

namespace {
constexpr int kMaxSteps = 1 << 22;
constexpr double kMaxIncrement = std::numbers::pi / 2.0;
}  // namespace

int winding_number(const DiskMap& map, int n_steps) {
    if (n_steps < 64) throw std::invalid_argument("winding_number: n_steps must be >= 64");

    for (int n = n_steps; n <= kMaxSteps; n *= 2) {
        const double h = 2.0 * std::numbers::pi / n;
        Complex prev = map.eval(Complex{1.0, 0.0});
        double turn = 0.0;
        bool resolved = true;
        for (int j = 1; j <= n; ++j) {
            const Complex cur = map.eval(unit_circle_point(j * h));
            const double inc = std::arg(cur / prev);
            if (!(std::abs(inc) < kMaxIncrement)) {  // also catches NaN from a vanishing value
                resolved = false;
                break;
            }
            turn += inc;
            prev = cur;
        }
        if (resolved) {
            return static_cast<int>(std::llround(turn / (2.0 * std::numbers::pi)));
        }
    }
    throw ConvergenceError(
        "winding_number: phase increments did not resolve below pi/2 within 2^22 steps "
        "(boundary-degenerate map?)");
}

double boundary_speed_integral(const DiskMap& map, int n_nodes, double fd_step) {
    if (n_nodes < 1) throw std::invalid_argument("boundary_speed_integral: need >= 1 node");
    const double h = 2.0 * std::numbers::pi / n_nodes;
    double sum = 0.0;
    for (int k = 0; k < n_nodes; ++k) sum += map.boundary_speed(k * h, fd_step);
    return sum * h;
}

}  // namespace disklev
