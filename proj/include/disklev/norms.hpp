#ifndef DISKLEV_NORMS_HPP
#define DISKLEV_NORMS_HPP

#include <cstdint>
#include <string_view>

#include "disklev/area.hpp"

namespace disklev {

enum class NormMethod { distributional, quadrature2d, closed_form };

std::string_view to_string(NormMethod m);

struct NormResult {
    double p = 1.0;
    double value = 0.0;
    NormMethod method = NormMethod::distributional;
    double error_estimate = 0.0;
};

/// ||f||_p via the layer-cake identity ||f||_p^p = p * integral of
/// mu(t) t^{p-1} over [0,1], with the superlevel areas mu(t) read off one
/// shared Monte Carlo sample at Gauss-Legendre nodes. The error estimate
/// combines the node-halving quadrature difference and the sampling error
/// in quadrature.
NormResult lp_norm_distributional(const DiskMap& map, double p, int t_nodes, long long n,
                                  std::uint64_t seed, int threads = 0);

/// Same identity evaluated on an existing shared sample.
NormResult lp_norm_distributional(const ModulusSample& sample, double p, int t_nodes);

/// Direct tensor quadrature of |f|^p over the disk: Gauss-Legendre in r
/// (with Jacobian r) times the periodic trapezoid rule in theta. The error
/// estimate is the node-halving difference.
NormResult lp_norm_quadrature2d(const DiskMap& map, double p, int radial_nodes,
                                int angular_nodes);

/// (2 pi / (2 + K d p))^{1/p}: the sharp lower bound on ||f||_p, attained
/// by the power-radial map with parameters (K, d).
double lp_lower_bound(double dilatation, int d, double p);

/// ||(z+a)/(1+z conj a)||_2 as a function of |a|. The removable singularity
/// at a = 0 is handled by a series in |a|^2; the value there is sqrt(pi/2).
double moebius_l2_closed_form(double a_modulus);

}  // namespace disklev

#endif
