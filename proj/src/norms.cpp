#include "disklev/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disklev/quadrature.hpp"

namespace disklev {

namespace {

constexpr double kPi = std::numbers::pi;

void require_p(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("Lp norm: p must be >= 1");
}

// p * sum_i w_i mu(t_i) t_i^{p-1} on Gauss-Legendre nodes over [0,1], with
// mu read from the sorted moduli.
double layer_cake_quadrature(const ModulusSample& sample, double p, int t_nodes) {
    const QuadratureRule rule = gauss_legendre(t_nodes, 0.0, 1.0);
    double integral = 0.0;
    for (int i = 0; i < t_nodes; ++i) {
        const double t = rule.nodes[static_cast<std::size_t>(i)];
        const double mu = sample.superlevel(t).value;
        integral += rule.weights[static_cast<std::size_t>(i)] * mu * std::pow(t, p - 1.0);
    }
    return p * integral;
}

double root_with_error(double integral, double integral_error, double p, double* value_error) {
    const double value = integral > 0.0 ? std::pow(integral, 1.0 / p) : 0.0;
    // d(I^{1/p}) = I^{1/p - 1} / p dI
    *value_error = value > 0.0 ? integral_error * value / (p * integral) : integral_error;
    return value;
}

}  // namespace

std::string_view to_string(NormMethod m) {
    switch (m) {
        case NormMethod::distributional: return "distributional";
        case NormMethod::quadrature2d: return "quadrature2d";
        case NormMethod::closed_form: return "closed_form";
    }
    return "?";
}

NormResult lp_norm_distributional(const ModulusSample& sample, double p, int t_nodes) {
    require_p(p);
    if (t_nodes < 16) throw std::invalid_argument("lp_norm_distributional: need >= 16 t nodes");

    const double integral = layer_cake_quadrature(sample, p, t_nodes);
    const double integral_half = layer_cake_quadrature(sample, p, t_nodes / 2);
    const double quad_err = std::abs(integral - integral_half);
    // The layer-cake quadrature of the empirical mu equals the sample mean
    // of pi |f|^p up to quadrature error, so its sampling error is that
    // statistic's standard error.
    const double mc_err = sample.integral_pow(p).second;
    const double total_err = std::sqrt(quad_err * quad_err + mc_err * mc_err);

    NormResult result;
    result.p = p;
    result.method = NormMethod::distributional;
    result.value = root_with_error(integral, total_err, p, &result.error_estimate);
    return result;
}

NormResult lp_norm_distributional(const DiskMap& map, double p, int t_nodes, long long n,
                                  std::uint64_t seed, int threads) {
    return lp_norm_distributional(ModulusSample::monte_carlo(map, n, seed, threads), p, t_nodes);
}

namespace {

double disk_integral_pow(const DiskMap& map, double p, int radial_nodes, int angular_nodes) {
    const QuadratureRule radial = gauss_legendre(radial_nodes, 0.0, 1.0);
    const double dtheta = 2.0 * kPi / angular_nodes;
    double integral = 0.0;
    for (int i = 0; i < radial_nodes; ++i) {
        const double r = radial.nodes[static_cast<std::size_t>(i)];
        double ring = 0.0;
        for (int k = 0; k < angular_nodes; ++k) {
            const double theta = k * dtheta;
            ring += std::pow(map.modulus(Complex{r * std::cos(theta), r * std::sin(theta)}), p);
        }
        integral += radial.weights[static_cast<std::size_t>(i)] * r * ring * dtheta;
    }
    return integral;
}

}  // namespace

NormResult lp_norm_quadrature2d(const DiskMap& map, double p, int radial_nodes,
                                int angular_nodes) {
    require_p(p);
    if (radial_nodes < 16 || angular_nodes < 16) {
        throw std::invalid_argument("lp_norm_quadrature2d: need >= 16 nodes per direction");
    }
    const double integral = disk_integral_pow(map, p, radial_nodes, angular_nodes);
    const double integral_half = disk_integral_pow(map, p, radial_nodes / 2, angular_nodes / 2);

    NormResult result;
    result.p = p;
    result.method = NormMethod::quadrature2d;
    result.value =
        root_with_error(integral, std::abs(integral - integral_half), p, &result.error_estimate);
    return result;
}

double lp_lower_bound(double dilatation, int d, double p) {
    require_p(p);
    if (d < 1) throw std::invalid_argument("lp_lower_bound: degree must be >= 1");
    if (dilatation < 1.0) throw std::invalid_argument("lp_lower_bound: dilatation must be >= 1");
    return std::pow(2.0 * kPi / (2.0 + dilatation * d * p), 1.0 / p);
}

double moebius_l2_closed_form(double a_modulus) {
    if (!(a_modulus >= 0.0 && a_modulus < 1.0)) {
        throw std::domain_error("moebius_l2_closed_form: need 0 <= |a| < 1");
    }
    const double x = a_modulus * a_modulus;
    double bracket;  // (2x^2 - x - (1-x)^2 log(1-x)) / x^2
    if (a_modulus < 1e-3) {
        // series of the bracket around x = 0; the closed form is 0/0 there
        bracket = 0.5 + x * (1.0 / 3.0 + x * (1.0 / 12.0 + x / 30.0));
    } else {
        const double one_minus = 1.0 - x;
        bracket = (2.0 * x * x - x - one_minus * one_minus * std::log1p(-x)) / (x * x);
    }
    return std::sqrt(kPi * bracket);
}

}  // namespace disklev
