#ifndef DISKLEV_MAPS_HPP
#define DISKLEV_MAPS_HPP

#include <vector>

#include "disklev/disk_map.hpp"

namespace disklev {

/// Finite product  B(z) = e^{i phase} * prod_k (z - a_k) / (1 - z conj(a_k)),
/// a degree-d holomorphic self-map of the disk with |B| = 1 on the circle.
class BlaschkeProduct final : public DiskMap {
public:
    /// Zeros must satisfy |a_k| <= 1 - 1e-9; at least one zero is required.
    BlaschkeProduct(double phase, std::vector<Complex> zeros);

    Complex eval(Complex z) const override;
    double modulus(Complex z) const override;

    std::optional<int> degree_hint() const override { return degree(); }
    int degree() const { return static_cast<int>(zeros_.size()); }
    double phase() const { return phase_; }
    const std::vector<Complex>& zeros() const { return zeros_; }

    /// Exact closed form on the circle:
    /// |B'(e^{is})| = sum_k (1 - |a_k|^2) / |e^{is} - a_k|^2.
    double boundary_speed(double s, double step = 0.0) const override;

private:
    double phase_;
    std::vector<Complex> zeros_;
};

/// f(z) = (z + a) / (1 + z conj(a)), a disk automorphism with f(0) = a.
/// Coincides with the degree-1 Blaschke product with zero -a and phase 0.
class MoebiusTransform final : public DiskMap {
public:
    explicit MoebiusTransform(Complex a);

    Complex eval(Complex z) const override;
    /// g(w) = (w - a) / (1 - w conj(a)); satisfies eval(inverse(w)) = w.
    Complex inverse(Complex w) const;

    std::optional<int> degree_hint() const override { return 1; }
    Complex a() const { return a_; }

private:
    Complex a_;
};

/// f(z) = e^{i d arg z} |z|^{K d}: winds d times, modulus depends on |z|
/// only, and meets the sharp sublevel bound with equality.
class PowerRadialMap final : public DiskMap {
public:
    PowerRadialMap(int d, double dilatation);

    Complex eval(Complex z) const override;
    double modulus(Complex z) const override;

    std::optional<int> degree_hint() const override { return d_; }
    double boundary_dilatation() const override { return dilatation_; }
    int d() const { return d_; }

private:
    int d_;
    double dilatation_;
};

}  // namespace disklev

#endif
