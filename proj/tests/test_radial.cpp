#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "disklev/area.hpp"
#include "disklev/maps.hpp"
#include "disklev/radial_qc.hpp"
#include "disklev/rng.hpp"
#include "disklev/winding.hpp"

using disklev::Complex;
using disklev::CounterRng;
using disklev::DensitySpec;
using disklev::RadialQCMap;

namespace {

constexpr double kPi = std::numbers::pi;

// h == 1, a = 1 integrates in closed form.
double reference_profile(double r) { return std::pow(r, 0.75) * std::exp((r - 1.0) / 4.0); }

DensitySpec linear_density(int samples) {
    std::vector<double> h;
    for (int i = 0; i < samples; ++i) {
        h.push_back(static_cast<double>(i) / (samples - 1));
    }
    return DensitySpec(std::move(h));
}

const std::vector<double> kProbes = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

TEST_CASE("density spec evaluation and integrals") {
    const auto density = linear_density(101);
    CHECK(density(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(density(0.25) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(density(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(density.integral() == doctest::Approx(0.5).epsilon(1e-12));
    // integral over [u, 1] of v dv = (1 - u^2)/2, exact for the interpolant.
    for (double u : {0.0, 0.3, 0.77, 1.0}) {
        CHECK(density.integral_from(u) == doctest::Approx((1.0 - u * u) / 2.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(density(1.5), std::invalid_argument);
    CHECK_THROWS_AS(DensitySpec({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DensitySpec({0.5, -0.1}), std::invalid_argument);
}

TEST_CASE("density csv round trip") {
    const auto path = std::filesystem::temp_directory_path() / "disklev_density_test.csv";
    {
        std::ofstream out(path);
        out << "v,h\n0,0\n0.5,0.5\n1,1\n";
    }
    const auto density = DensitySpec::from_csv(path);
    CHECK(density.values() == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(density.integral() == doctest::Approx(0.5).epsilon(1e-12));
    {
        std::ofstream out(path);
        out << "0,1\n0.4,1\n1,1\n";  // non-uniform grid
    }
    CHECK_THROWS_AS(DensitySpec::from_csv(path), std::invalid_argument);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(DensitySpec::from_csv(path), std::invalid_argument);
}

TEST_CASE("zero density reduces to the power map") {
    const auto identity = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 512);
    for (double r : {1e-6, 0.01, 0.3, 0.7, 0.999, 1.0}) {
        CHECK(identity.g(r) == doctest::Approx(r).epsilon(1e-9));
    }
    CHECK(std::abs(identity.eval(Complex(0.3, 0.4)) - Complex(0.3, 0.4)) < 1e-9);

    const auto square = RadialQCMap::build(2.0, 2.0, DensitySpec::constant(0.0), 512);
    const disklev::PowerRadialMap power(1, 2.0);
    for (double r : {0.1, 0.5, 0.9}) {
        CHECK(square.g(r) == doctest::Approx(power.modulus(Complex(r, 0.0))).epsilon(1e-9));
    }
    CHECK(square.g_inverse(0.25) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(square.boundary_dilatation() == 2.0);
}

TEST_CASE("constant density matches the closed-form profile") {
    const auto map = RadialQCMap::build(1.0, 1.0, DensitySpec::constant(1.0), 4096);
    double worst = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double r = i / 1000.0;
        worst = std::max(worst, std::abs(map.g(r) - reference_profile(r)));
    }
    for (double r : {1e-6, 1e-5, 1e-4, 1e-3}) {
        worst = std::max(worst, std::abs(map.g(r) - reference_profile(r)));
    }
    CHECK(worst <= 1e-6);
    CHECK(map.g(0.5) == doctest::Approx(0.5247357978).epsilon(1e-6));
    CHECK(std::abs(map.table_g(map.table_size() - 1) - 1.0) < 1e-10);
    CHECK(std::abs(map.g(1e-9) - reference_profile(1e-9)) < 1e-9);

    const Complex image = map.eval(Complex(0.0, 0.5));
    CHECK(std::abs(image - Complex(0.0, 0.5247357978)) < 1e-6);
    CHECK(std::abs(map.eval(Complex(0.6, 0.8))) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("laplacian residuals verify the density relation") {
    const auto harmonic = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 512);
    CHECK(harmonic.max_laplacian_residual(kProbes, 1e-4) <= 1e-5);

    const auto constant = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(1.0), 4096);
    CHECK(constant.max_laplacian_residual(kProbes, 1e-4) <= 1e-3);

    const auto linear = RadialQCMap::build(1.0, std::nullopt, linear_density(101), 4096);
    CHECK(linear.max_laplacian_residual(kProbes, 1e-4) <= 5e-3);
}

TEST_CASE("residual probe and step validation") {
    const auto map = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 512);
    CHECK_THROWS_AS(map.max_laplacian_residual(std::vector<double>{0.01}, 1e-4),
                    std::invalid_argument);
    CHECK_THROWS_AS(map.max_laplacian_residual(kProbes, 1e-2), std::invalid_argument);
    CHECK_THROWS_AS(map.max_laplacian_residual(kProbes, 0.0), std::invalid_argument);
}

TEST_CASE("profile inverse") {
    const auto map = RadialQCMap::build(1.0, 1.0, DensitySpec::constant(1.0), 4096);
    CHECK(map.g_inverse(1.0) == 1.0);
    CHECK(map.g_inverse(0.0) == 0.0);
    CHECK(map.g_inverse(0.5247357978) == doctest::Approx(0.5).epsilon(1e-5));
    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(map.g(map.g_inverse(t)) == doctest::Approx(t).epsilon(1e-9));
    }
    CHECK_THROWS_AS(map.g_inverse(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(map.g_inverse(1.1), std::invalid_argument);
}

TEST_CASE("build rejections") {
    CHECK_THROWS_AS(RadialQCMap::build(0.2, std::nullopt, DensitySpec::constant(1.0), 512),
                    std::invalid_argument);  // integral 1 >= 4a = 0.8
    CHECK_THROWS_AS(RadialQCMap::build(1.0, 0.5, DensitySpec::constant(0.0), 512),
                    std::invalid_argument);  // K below a
    CHECK_THROWS_AS(RadialQCMap::build(-1.0, std::nullopt, DensitySpec::constant(0.0), 512),
                    std::invalid_argument);
    CHECK_THROWS_AS(RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 100),
                    std::invalid_argument);
    const auto map = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 512);
    CHECK_THROWS_AS(map.eval(Complex(1.5, 0.0)), std::domain_error);
    CHECK_THROWS_AS(map.g(-0.5), std::invalid_argument);
}

TEST_CASE("random admissible profiles satisfy the sharp bound with K = a") {
    const CounterRng rng(29);
    for (std::uint64_t q = 0; q < 10; ++q) {
        std::vector<double> h;
        for (int i = 0; i < 17; ++i) {
            h.push_back(2.0 * rng.uniform01(32 * q + static_cast<std::uint64_t>(i)));
        }
        DensitySpec density(h);
        const double a = density.integral() / 4.0 + 0.05 + rng.uniform01(9000 + q);
        const auto map = RadialQCMap::build(a, std::nullopt, std::move(density), 512);

        CHECK(std::abs(map.table_g(map.table_size() - 1) - 1.0) < 1e-10);
        CHECK(map.max_log_slope() <= a + 1e-8);
        CHECK(map.boundary_dilatation() == a);
        for (double t : kProbes) {
            const double radius = map.g_inverse(t);
            const double area = kPi * radius * radius;
            const double bound = kPi * std::pow(t, 2.0 / a);
            CHECK(area <= bound + 1e-9);
        }
    }
}

TEST_CASE("radial maps wind once") {
    const auto map = RadialQCMap::build(1.0, 1.0, DensitySpec::constant(1.0), 512);
    CHECK(disklev::winding_number(map) == 1);
    CHECK(map.degree_hint() == 1);
}

TEST_CASE("grid estimator agrees with the exact radial area") {
    const auto map = RadialQCMap::build(1.0, 1.0, DensitySpec::constant(1.0), 1024);
    for (double t : {0.2, 0.4, 0.7}) {
        const double radius = map.g_inverse(t);
        const double exact = kPi * radius * radius;
        const auto grid = disklev::sublevel_area_grid(map, t, 256);
        REQUIRE(grid.bracket.has_value());
        CHECK(grid.bracket->lower <= exact);
        CHECK(exact <= grid.bracket->upper);
    }
}

TEST_CASE("table export format") {
    const auto map = RadialQCMap::build(1.0, std::nullopt, DensitySpec::constant(0.0), 512);
    const auto path = std::filesystem::temp_directory_path() / "disklev_gtable_test.csv";
    map.export_table_csv(path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,g");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == map.table_size());
    std::filesystem::remove(path);
}
