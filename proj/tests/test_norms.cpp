#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "disklev/maps.hpp"
#include "disklev/norms.hpp"
#include "disklev/rng.hpp"

using disklev::BlaschkeProduct;
using disklev::Complex;
using disklev::CounterRng;
using disklev::MoebiusTransform;
using disklev::PowerRadialMap;

namespace {

constexpr double kPi = std::numbers::pi;

Complex random_interior(const CounterRng& rng, std::uint64_t index, double r_max) {
    const double r = r_max * std::sqrt(rng.uniform01(2 * index));
    const double angle = 2.0 * kPi * rng.uniform01(2 * index + 1);
    return std::polar(r, angle);
}

}  // namespace

TEST_CASE("sharp lower bound closed form") {
    CHECK(disklev::lp_lower_bound(1.0, 1, 2.0) ==
          doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-14));
    CHECK(disklev::lp_lower_bound(1.0, 1, 1.0) ==
          doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
    CHECK(disklev::lp_lower_bound(1.0, 2, 2.0) ==
          doctest::Approx(std::sqrt(kPi / 3.0)).epsilon(1e-14));
    CHECK(disklev::lp_lower_bound(100.0, 1, 2.0) ==
          doctest::Approx(std::sqrt(2.0 * kPi / 202.0)).epsilon(1e-14));
    CHECK_THROWS_AS(disklev::lp_lower_bound(0.5, 1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_lower_bound(1.0, 0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_lower_bound(1.0, 1, 0.5), std::invalid_argument);
}

TEST_CASE("identity map norms are exact equality cases") {
    const PowerRadialMap identity(1, 1.0);
    const auto quad2 = disklev::lp_norm_quadrature2d(identity, 2.0, 64, 64);
    CHECK(quad2.value == doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-12));
    const auto quad4 = disklev::lp_norm_quadrature2d(identity, 4.0, 64, 64);
    CHECK(quad4.value == doctest::Approx(std::pow(kPi / 3.0, 0.25)).epsilon(1e-12));

    const auto dist = disklev::lp_norm_distributional(identity, 2.0, 64, 400'000, 21);
    CHECK(std::abs(dist.value - std::sqrt(kPi / 2.0)) < 3.0 * dist.error_estimate + 1e-4);
}

TEST_CASE("power radial equality family across dilatations") {
    struct Case {
        int d;
        double dilatation;
        double p;
    };
    for (const auto& c : {Case{3, 2.0, 2.0}, Case{1, 100.0, 2.0}, Case{2, 1.0, 1.0}}) {
        const PowerRadialMap map(c.d, c.dilatation);
        const double exact = disklev::lp_lower_bound(c.dilatation, c.d, c.p);
        const auto quad = disklev::lp_norm_quadrature2d(map, c.p, 512, 64);
        CHECK(quad.value == doctest::Approx(exact).epsilon(1e-4));
    }
}

TEST_CASE("moebius l2 closed form values") {
    CHECK(disklev::moebius_l2_closed_form(0.0) ==
          doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-14));
    CHECK(disklev::moebius_l2_closed_form(0.25) == doctest::Approx(1.27957).epsilon(1e-4));
    CHECK(disklev::moebius_l2_closed_form(0.5) == doctest::Approx(1.360443).epsilon(1e-5));
    CHECK(disklev::moebius_l2_closed_form(0.75) == doctest::Approx(1.50639).epsilon(1e-4));
    CHECK(disklev::moebius_l2_closed_form(0.999) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(2e-3));
    CHECK_THROWS_AS(disklev::moebius_l2_closed_form(-0.1), std::domain_error);
    CHECK_THROWS_AS(disklev::moebius_l2_closed_form(1.0), std::domain_error);
}

TEST_CASE("moebius l2 series branch joins the direct branch smoothly") {
    const double left = disklev::moebius_l2_closed_form(0.0009999);
    const double right = disklev::moebius_l2_closed_form(0.0010001);
    CHECK(std::abs(left - right) < 1e-9);
}

TEST_CASE("moebius l2 closed form is nondecreasing with minimum at zero") {
    double previous = disklev::moebius_l2_closed_form(0.0);
    const double at_zero = previous;
    for (int i = 1; i < 100; ++i) {
        const double value = disklev::moebius_l2_closed_form(0.999 * i / 99.0);
        CHECK(value >= previous - 1e-12);
        previous = value;
    }
    CHECK(at_zero <= disklev::moebius_l2_closed_form(0.01));
}

TEST_CASE("moebius l2 closed form against both numerical routes") {
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
        const double exact = disklev::moebius_l2_closed_form(a);
        const MoebiusTransform map(Complex(a, 0.0));
        const auto quad = disklev::lp_norm_quadrature2d(map, 2.0, 256, 512);
        CHECK(quad.value == doctest::Approx(exact).epsilon(1e-6));
        const auto dist = disklev::lp_norm_distributional(map, 2.0, 64, 400'000, 31);
        CHECK(std::abs(dist.value - exact) < 3.0 * dist.error_estimate + 1e-3);
    }
}

TEST_CASE("the two norm routes agree on blaschke products") {
    const BlaschkeProduct map(0.4, {Complex(0.4, 0.1), Complex(-0.2, 0.3)});
    const auto sample = disklev::ModulusSample::monte_carlo(map, 400'000, 17);
    for (double p : {1.0, 2.0, 4.0}) {
        const auto dist = disklev::lp_norm_distributional(sample, p, 64);
        const auto quad = disklev::lp_norm_quadrature2d(map, p, 256, 512);
        CHECK(std::abs(dist.value - quad.value) <
              3.0 * (dist.error_estimate + quad.error_estimate) + 1e-3);
        CHECK(dist.error_estimate >= 0.0);
        CHECK(quad.error_estimate >= 0.0);
    }
}

TEST_CASE("random products respect the norm lower bound") {
    const CounterRng rng(23);
    for (std::uint64_t q = 0; q < 30; ++q) {
        const int d = 1 + static_cast<int>(rng.uniform01(5000 + q) * 5.0);
        std::vector<Complex> zeros;
        for (int k = 0; k < d; ++k) {
            zeros.push_back(random_interior(rng, 64 * q + static_cast<std::uint64_t>(k), 0.9));
        }
        const BlaschkeProduct map(0.0, zeros);
        const auto sample = disklev::ModulusSample::monte_carlo(map, 100'000, 400 + q);
        for (double p : {1.0, 2.0}) {
            const auto norm = disklev::lp_norm_distributional(sample, p, 48);
            const double floor = disklev::lp_lower_bound(1.0, d, p);
            CHECK(norm.value >= floor - 3.0 * norm.error_estimate - 1e-3);
        }
    }
}

TEST_CASE("norm input validation") {
    const PowerRadialMap identity(1, 1.0);
    CHECK_THROWS_AS(disklev::lp_norm_quadrature2d(identity, 0.5, 64, 64), std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_norm_quadrature2d(identity, 2.0, 8, 64), std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_norm_quadrature2d(identity, 2.0, 64, 8), std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_norm_distributional(identity, 2.0, 8, 10'000, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(disklev::lp_norm_distributional(identity, 0.99, 64, 10'000, 0),
                    std::invalid_argument);
}
