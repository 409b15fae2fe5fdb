#ifndef DISKLEV_DISK_MAP_HPP
#define DISKLEV_DISK_MAP_HPP

#include <optional>

#include "disklev/complex_point.hpp"

namespace disklev {

/// Uniform handle for self-maps of the closed unit disk with unimodular
/// boundary values. Implementations are immutable after construction and
/// safe to evaluate concurrently.
class DiskMap {
public:
    virtual ~DiskMap() = default;

    virtual Complex eval(Complex z) const = 0;

    /// |eval(z)|; overridden where the modulus is cheaper than the value.
    virtual double modulus(Complex z) const { return std::abs(eval(z)); }

    /// Topological degree when known at construction (zero count, power
    /// exponent); std::nullopt forces callers onto winding_number().
    virtual std::optional<int> degree_hint() const { return std::nullopt; }

    /// Boundary dilatation K >= 1; 1 for holomorphic maps.
    virtual double boundary_dilatation() const { return 1.0; }

    /// |d/ds f(e^{is})|. Default: symmetric finite differences along the
    /// circle; subclasses with a closed form ignore `step`.
    virtual double boundary_speed(double s, double step = 1e-5) const;
};

}  // namespace disklev

#endif
