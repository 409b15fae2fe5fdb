#ifndef DISKLEV_RADIAL_QC_HPP
#define DISKLEV_RADIAL_QC_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "disklev/disk_map.hpp"

namespace disklev {

/// Nonnegative density h on [0,1], sampled on a uniform grid and read by
/// linear interpolation. Drives the radial profile through the relation
/// 4r * laplacian(log g)(r) = h(r); admissibility against an exponent a
/// requires integral(h) < 4a.
class DensitySpec {
public:
    /// Samples at v_i = i/(m-1); m >= 2, every value >= 0.
    explicit DensitySpec(std::vector<double> h_values);

    static DensitySpec constant(double h);
    static DensitySpec from_csv(const std::filesystem::path& path);

    double operator()(double v) const;
    /// Exact integral of the interpolant over [0, 1].
    double integral() const { return cumulative_.back(); }
    /// Exact integral of the interpolant over [u, 1].
    double integral_from(double u) const;

    const std::vector<double>& values() const { return h_; }

private:
    std::vector<double> h_;
    std::vector<double> cumulative_;  // integral over [0, v_i]
};

/// Radial map f(z) = g(r) e^{i theta} whose profile solves
/// log g(s) = -integral_s^1 (a - H(u))/u du with H(u) = integral_u^1 h/4.
/// g is strictly increasing with g(0+) = 0 and g(1) = 1, winds once, and
/// satisfies r g'(r)/g(r) <= a everywhere.
class RadialQCMap final : public DiskMap {
public:
    /// dilatation defaults to a (the minimal admissible value) when omitted;
    /// values below a are rejected. Throws std::invalid_argument when the
    /// admissibility condition integral(h) < 4a fails.
    static RadialQCMap build(double a, std::optional<double> dilatation, DensitySpec density,
                             int grid_size = 4096);

    Complex eval(Complex z) const override;
    double modulus(Complex z) const override { return g(std::abs(z)); }
    std::optional<int> degree_hint() const override { return 1; }
    double boundary_dilatation() const override { return dilatation_; }

    /// Profile value by linear interpolation of the (r, g) table; inputs
    /// above 1 clamp to g(1) = 1.
    double g(double r) const;

    /// r with g(r) = t, by bisection on the monotone table to 1e-12.
    double g_inverse(double t) const;

    /// Largest discrete r g'(r)/g(r) over the table.
    double max_log_slope() const;

    /// Max over probes of |4r * laplacian(log g)(r) - h(r)|, the defining
    /// relation between profile and density. The Laplacian is formed by
    /// central second differences of log g on the table's uniform
    /// log-radius grid; `step` is a lower bound on the differencing step
    /// and is widened to the table spacing when finer.
    double max_laplacian_residual(std::span<const double> r_probes, double step) const;

    double exponent() const { return a_; }
    const DensitySpec& density() const { return density_; }

    /// Two-column CSV (r, g) of the whole table.
    void export_table_csv(const std::filesystem::path& path) const;

    /// Table accessors (nodes are exp of a uniform log-radius grid).
    std::size_t table_size() const { return log_g_.size(); }
    double table_r(std::size_t j) const;
    double table_g(std::size_t j) const { return std::exp(log_g_[j]); }

private:
    RadialQCMap(double a, double dilatation, DensitySpec density);

    double log_g_at(double w) const;  // w = log r, linear in the table

    double a_;
    double dilatation_;
    DensitySpec density_;
    double w0_ = 0.0;  // log of the radial cutoff
    double dw_ = 0.0;
    std::vector<double> log_g_;  // at w0 + j*dw, last node is r = 1
};

}  // namespace disklev

#endif
