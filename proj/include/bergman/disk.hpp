#pragma once

#include <complex>

namespace bergman {

using cplx = std::complex<double>;

/// Closest admissible distance to the unit circle. Every kernel formula
/// carries a (1 - |z|^2) factor, so points nearer than this are rejected.
inline constexpr double kBoundaryMargin = 1e-12;

/// A point of the open unit disk, |z| <= 1 - kBoundaryMargin.
class DiskPoint {
public:
    constexpr DiskPoint() = default;
    /// Throws std::out_of_range when |value| > 1 - kBoundaryMargin.
    DiskPoint(cplx value);  // NOLINT(google-explicit-constructor)
    DiskPoint(double re, double im = 0.0) : DiskPoint(cplx{re, im}) {}

    [[nodiscard]] constexpr cplx value() const { return value_; }
    [[nodiscard]] double abs() const { return std::abs(value_); }
    [[nodiscard]] double norm() const { return std::norm(value_); }
    /// 1 - |z|^2
    [[nodiscard]] double gap() const { return 1.0 - std::norm(value_); }

    static bool admissible(cplx value);

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    cplx value_{0.0, 0.0};
};

/// phi_z(w) = (z - w) / (1 - conj(z) w). An involution of the disk.
DiskPoint mobius_eval(DiskPoint z, DiskPoint w);

/// phi_z'(w) = (|z|^2 - 1) / (1 - conj(z) w)^2.
cplx mobius_deriv(DiskPoint z, DiskPoint w);

/// Bergman reproducing kernel K_z(w) = 1 / (1 - conj(z) w)^2.
cplx bergman_kernel(DiskPoint z, DiskPoint w);

/// Normalized kernel k_z(w) = (1 - |z|^2) / (1 - conj(z) w)^2, unit norm in L^2_a.
cplx normalized_kernel(DiskPoint z, DiskPoint w);

/// Pseudo-hyperbolic identity 1 - |phi_z(w)|^2 = (1-|z|^2)(1-|w|^2)/|1-conj(z)w|^2,
/// right-hand side only. Used to check mobius_eval without cancellation.
double mobius_gap(DiskPoint z, DiskPoint w);

}  // namespace bergman
