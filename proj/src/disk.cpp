#include "bergman/disk.hpp"

#include <sstream>
#include <stdexcept>

namespace bergman {

DiskPoint::DiskPoint(cplx value) : value_(value) {
    if (!admissible(value)) {
        std::ostringstream msg;
        msg << "point " << value << " is not inside the unit disk (|z| must be <= 1 - "
            << kBoundaryMargin << ")";
        throw std::out_of_range(msg.str());
    }
}

bool DiskPoint::admissible(cplx value) {
    return std::isfinite(value.real()) && std::isfinite(value.imag()) &&
           std::abs(value) <= 1.0 - kBoundaryMargin;
}

DiskPoint mobius_eval(DiskPoint z, DiskPoint w) {
    const cplx a = z.value();
    const cplx b = w.value();
    cplx r = (a - b) / (1.0 - std::conj(a) * b);
    // |phi_z(w)| < 1 holds exactly; rounding can only push it onto the margin.
    if (!DiskPoint::admissible(r)) r *= (1.0 - kBoundaryMargin) / std::abs(r);
    return DiskPoint{r};
}

cplx mobius_deriv(DiskPoint z, DiskPoint w) {
    const cplx d = 1.0 - std::conj(z.value()) * w.value();
    return (z.norm() - 1.0) / (d * d);
}

cplx bergman_kernel(DiskPoint z, DiskPoint w) {
    const cplx d = 1.0 - std::conj(z.value()) * w.value();
    return 1.0 / (d * d);
}

cplx normalized_kernel(DiskPoint z, DiskPoint w) {
    return z.gap() * bergman_kernel(z, w);
}

double mobius_gap(DiskPoint z, DiskPoint w) {
    return z.gap() * w.gap() / std::norm(1.0 - std::conj(z.value()) * w.value());
}

}  // namespace bergman
