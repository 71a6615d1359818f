#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bergman/disk.hpp"
#include "bergman/symbols.hpp"

// Deterministic generators for randomized checks.
namespace bergman::sampling {

/// Uniform-ish random points with |z| <= radius.
inline std::vector<DiskPoint> random_points(std::mt19937_64& rng, int count, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<DiskPoint> pts;
    for (int i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(unit(rng));
        pts.emplace_back(std::polar(r, 2.0 * std::numbers::pi * unit(rng)));
    }
    return pts;
}

inline cplx random_coeff(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

/// Random polynomial symbol with j + k <= degree and `terms` nonzero terms.
inline MonomialSymbol random_symbol(std::mt19937_64& rng, int degree, int terms) {
    std::uniform_int_distribution<int> pick(0, degree);
    MonomialSymbol s;
    while (static_cast<int>(s.terms().size()) < terms) {
        const int j = pick(rng);
        const int k = std::uniform_int_distribution<int>(0, degree - j)(rng);
        s.add(j, k, random_coeff(rng));
    }
    return s;
}

/// Random harmonic polynomial: analytic part plus conjugate-analytic part.
inline MonomialSymbol random_harmonic(std::mt19937_64& rng, int degree) {
    MonomialSymbol s;
    s.add(0, 0, random_coeff(rng));
    for (int d = 1; d <= degree; ++d) {
        s.add(d, 0, random_coeff(rng) / double(d));
        s.add(0, d, random_coeff(rng) / double(d));
    }
    return s;
}

/// Grid of roughly `count` points on concentric circles up to `radius`.
inline std::vector<DiskPoint> disk_grid(int rings, int per_ring, double radius) {
    std::vector<DiskPoint> pts{DiskPoint{0.0}};
    for (int i = 1; i <= rings; ++i)
        for (int t = 0; t < per_ring; ++t)
            pts.emplace_back(std::polar(radius * i / rings, 2.0 * std::numbers::pi * (t + 0.5 * (i % 2)) / per_ring));
    return pts;
}

}  // namespace bergman::sampling
