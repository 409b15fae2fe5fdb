#ifndef DISKLEV_QUADRATURE_HPP
#define DISKLEV_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace disklev {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Integral of a 2*pi-periodic function over one period with n equispaced
/// nodes (the trapezoid rule; spectrally accurate for smooth periodic f).
double periodic_trapezoid(const std::function<double(double)>& f, int n);

}  // namespace disklev

#endif
