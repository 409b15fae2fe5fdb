#ifndef DISKLEV_BOUNDS_HPP
#define DISKLEV_BOUNDS_HPP

#include <span>
#include <string_view>

#include "disklev/area.hpp"

namespace disklev {

enum class BoundVerdict { holds, holds_within_error, violated };

std::string_view to_string(BoundVerdict v);

/// One sublevel-bound check: the measured area against pi * t^{2/(K d)}.
struct BoundReport {
    double t = 0.0;
    int d = 1;
    double dilatation = 1.0;  // K
    AreaEstimate measured_sublevel;
    double sharp_bound = 0.0;
    double margin = 0.0;  // sharp_bound - measured
    BoundVerdict verdict = BoundVerdict::holds;
};

/// pi * t^{2/(K d)}, the sharp ceiling for the sublevel area |{|f| < t}|.
double sharp_sublevel_bound(double t, int d, double dilatation);

/// Measures the sublevel area and grades it against the sharp bound. The
/// degree comes from the map's hint, or from winding_number when absent.
/// "violated" requires the measurement to clear the bound by more than
/// three standard errors (or a grid lower bracket above the bound);
/// "holds_within_error" flags candidate equality cases.
BoundReport check_bound(const DiskMap& map, double t, const EstimatorConfig& config);

/// Same grading applied to an already-measured sublevel estimate.
BoundReport grade_bound(double t, int d, double dilatation, const AreaEstimate& measured);

/// Superlevel area |{|f| > t}| of the disk automorphism (z+a)/(1+z conj a):
/// pi (1-t^2)(1-|a|^4 t^2) / (1-|a|^2 t^2)^2. Depends on a through |a| only.
double moebius_superlevel_closed_form(double a_modulus, double t);

/// True when the closed form is nondecreasing along the given |a| grid.
bool moebius_monotonicity_check(double t, std::span<const double> r_grid);

}  // namespace disklev

#endif
