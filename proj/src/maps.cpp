#include "disklev/maps.hpp"

#include <cmath>
#include <stdexcept>

namespace disklev {

namespace {

constexpr double kZeroRadiusMax = 1.0 - 1e-9;  // keeps factor denominators away from 0
constexpr double kEvalSlack = 1e-9;

void require_in_closed_disk(Complex z) {
    require_finite(z, "disk map evaluation");
    if (std::abs(z) > 1.0 + kEvalSlack) {
        throw std::domain_error("disk map evaluation: |z| exceeds 1 + 1e-9");
    }
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(double phase, std::vector<Complex> zeros)
    : phase_(phase), zeros_(std::move(zeros)) {
    require_finite(phase, "BlaschkeProduct phase");
    if (zeros_.empty()) {
        throw std::invalid_argument("BlaschkeProduct: degree must be >= 1 (no zeros given)");
    }
    for (const Complex& a : zeros_) {
        require_finite(a, "BlaschkeProduct zero");
        if (std::abs(a) > kZeroRadiusMax) {
            throw std::invalid_argument("BlaschkeProduct: zeros must satisfy |a| <= 1 - 1e-9");
        }
    }
}

Complex BlaschkeProduct::eval(Complex z) const {
    require_in_closed_disk(z);
    Complex w = std::polar(1.0, phase_);
    for (const Complex& a : zeros_) {
        w *= (z - a) / (1.0 - z * std::conj(a));
    }
    return w;
}

double BlaschkeProduct::modulus(Complex z) const {
    require_in_closed_disk(z);
    double m2 = 1.0;
    for (const Complex& a : zeros_) {
        m2 *= std::norm(z - a) / std::norm(1.0 - z * std::conj(a));
    }
    return std::sqrt(m2);
}

double BlaschkeProduct::boundary_speed(double s, double /*step*/) const {
    const Complex z = unit_circle_point(s);
    double speed = 0.0;
    for (const Complex& a : zeros_) {
        speed += (1.0 - std::norm(a)) / std::norm(z - a);
    }
    return speed;
}

MoebiusTransform::MoebiusTransform(Complex a) : a_(a) {
    require_finite(a, "MoebiusTransform parameter");
    if (std::abs(a) >= 1.0) {
        throw std::invalid_argument("MoebiusTransform: parameter must satisfy |a| < 1");
    }
}

Complex MoebiusTransform::eval(Complex z) const {
    require_in_closed_disk(z);
    return (z + a_) / (1.0 + z * std::conj(a_));
}

Complex MoebiusTransform::inverse(Complex w) const {
    require_in_closed_disk(w);
    return (w - a_) / (1.0 - w * std::conj(a_));
}

PowerRadialMap::PowerRadialMap(int d, double dilatation) : d_(d), dilatation_(dilatation) {
    require_finite(dilatation, "PowerRadialMap dilatation");
    if (d < 1) throw std::invalid_argument("PowerRadialMap: winding degree must be >= 1");
    if (dilatation < 1.0) throw std::invalid_argument("PowerRadialMap: dilatation must be >= 1");
}

Complex PowerRadialMap::eval(Complex z) const {
    require_in_closed_disk(z);
    const double r = std::abs(z);
    if (r == 0.0) return {0.0, 0.0};
    return std::polar(std::pow(r, dilatation_ * d_), d_ * std::arg(z));
}

double PowerRadialMap::modulus(Complex z) const {
    require_in_closed_disk(z);
    return std::pow(std::abs(z), dilatation_ * d_);
}

}  // namespace disklev
