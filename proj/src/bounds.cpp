#include "disklev/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disklev/winding.hpp"

namespace disklev {

std::string_view to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::holds: return "holds";
        case BoundVerdict::holds_within_error: return "holds_within_error";
        case BoundVerdict::violated: return "violated";
    }
    return "?";
}

double sharp_sublevel_bound(double t, int d, double dilatation) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("sharp_sublevel_bound: t outside [0, 1]");
    if (d < 1) throw std::invalid_argument("sharp_sublevel_bound: degree must be >= 1");
    if (dilatation < 1.0) throw std::invalid_argument("sharp_sublevel_bound: dilatation must be >= 1");
    return std::numbers::pi * std::pow(t, 2.0 / (dilatation * d));
}

BoundReport grade_bound(double t, int d, double dilatation, const AreaEstimate& measured) {
    BoundReport report;
    report.t = t;
    report.d = d;
    report.dilatation = dilatation;
    report.measured_sublevel = measured;
    report.sharp_bound = sharp_sublevel_bound(t, d, dilatation);
    report.margin = report.sharp_bound - measured.value;

    if (measured.method == AreaMethod::grid && measured.bracket) {
        if (measured.bracket->lower > report.sharp_bound) {
            report.verdict = BoundVerdict::violated;
        } else if (measured.bracket->upper >= report.sharp_bound) {
            report.verdict = BoundVerdict::holds_within_error;
        } else {
            report.verdict = BoundVerdict::holds;
        }
    } else {
        const double band = 3.0 * measured.std_error;
        if (measured.value - band > report.sharp_bound) {
            report.verdict = BoundVerdict::violated;
        } else if (std::abs(measured.value - report.sharp_bound) <= band) {
            report.verdict = BoundVerdict::holds_within_error;
        } else {
            report.verdict = BoundVerdict::holds;
        }
    }
    return report;
}

BoundReport check_bound(const DiskMap& map, double t, const EstimatorConfig& config) {
    const int d = map.degree_hint() ? *map.degree_hint() : winding_number(map);
    return grade_bound(t, d, map.boundary_dilatation(), sublevel_area(map, t, config));
}

double moebius_superlevel_closed_form(double a_modulus, double t) {
    if (!(a_modulus >= 0.0 && a_modulus < 1.0)) {
        throw std::domain_error("moebius_superlevel_closed_form: need 0 <= |a| < 1");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("moebius_superlevel_closed_form: t outside [0, 1]");
    }
    const double a2 = a_modulus * a_modulus;
    const double t2 = t * t;
    const double denom = 1.0 - a2 * t2;
    return std::numbers::pi * (1.0 - t2) * (1.0 - a2 * a2 * t2) / (denom * denom);
}

bool moebius_monotonicity_check(double t, std::span<const double> r_grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("moebius_monotonicity_check: t outside [0, 1]");
    double prev = -1.0;
    for (double r : r_grid) {
        const double cur = moebius_superlevel_closed_form(r, t);
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

}  // namespace disklev
