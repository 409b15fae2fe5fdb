#ifndef DISKLEV_WINDING_HPP
#define DISKLEV_WINDING_HPP

#include <stdexcept>

#include "disklev/disk_map.hpp"

namespace disklev {

/// Raised when adaptive refinement hits its step cap; signals a map whose
/// boundary values degenerate (e.g. vanish) somewhere on the circle.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Winding number of s -> f(e^{is}) around the origin, by continuous
/// argument tracking. Starting from n_steps (>= 64), the step count doubles
/// until every adjacent phase increment is below pi/2, then the accumulated
/// turn is rounded to an integer multiple of 2*pi. Throws ConvergenceError
/// past 2^22 steps.
int winding_number(const DiskMap& map, int n_steps = 1024);

/// Quadrature of boundary_speed over [0, 2*pi] with n equispaced nodes.
/// Equals 2*pi*winding_number for maps with unimodular boundary values.
double boundary_speed_integral(const DiskMap& map, int n_nodes = 1 << 16, double fd_step = 1e-5);

}  // namespace disklev

#endif
