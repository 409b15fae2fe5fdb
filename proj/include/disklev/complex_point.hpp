#ifndef DISKLEV_COMPLEX_POINT_HPP
#define DISKLEV_COMPLEX_POINT_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace disklev {

/// Points of the plane are plain double-precision complex numbers.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws std::invalid_argument when z has a NaN/Inf component.
inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw std::invalid_argument(std::string(what) + ": non-finite complex value");
    }
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

inline Complex unit_circle_point(double s) {
    return {std::cos(s), std::sin(s)};
}

}  // namespace disklev

#endif
