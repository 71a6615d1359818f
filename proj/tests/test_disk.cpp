#include <doctest.h>

#include <random>

#include "bergman/disk.hpp"
#include "bergman/quadrature.hpp"
#include "test_support.hpp"

using namespace bergman;
using bergman::testing::random_points;

TEST_CASE("disk points reject the boundary") {
    CHECK_THROWS_AS(DiskPoint(1.0), std::out_of_range);
    CHECK_THROWS_AS(DiskPoint(cplx{0.8, 0.7}), std::out_of_range);
    CHECK_THROWS_AS(DiskPoint(1.0 - 1e-13), std::out_of_range);
    CHECK_THROWS_AS(DiskPoint(cplx{NAN, 0.0}), std::out_of_range);
    CHECK_NOTHROW(DiskPoint(1.0 - 2e-12));
    CHECK(DiskPoint(0.6, 0.8 - 1e-3).abs() < 1.0);
}

TEST_CASE("mobius_eval") {
    CHECK(std::abs(mobius_eval(0.3, 0.0).value() - 0.3) < 1e-15);
    CHECK(std::abs(mobius_eval(0.3, 0.3).value()) < 1e-15);
    const DiskPoint z{cplx{0.0, 0.5}};
    const DiskPoint r = mobius_eval(z, 0.2);
    CHECK(std::abs(mobius_eval(z, r).value() - 0.2) < 1e-15);

    std::mt19937_64 rng(11);
    const auto zs = random_points(rng, 40, 0.99);
    const auto ws = random_points(rng, 40, 0.99);
    for (const auto& a : zs) {
        for (const auto& b : ws) {
            const DiskPoint img = mobius_eval(a, b);
            CHECK(img.abs() < 1.0);
            CHECK(std::abs(mobius_eval(a, img).value() - b.value()) < 1e-12);
            // 1 - |phi_z(w)|^2 = (1-|z|^2)(1-|w|^2)/|1 - conj(z) w|^2
            CHECK(std::abs(img.gap() - mobius_gap(a, b)) < 1e-12);
        }
    }
}

TEST_CASE("mobius_deriv") {
    CHECK(std::abs(mobius_deriv(0.0, cplx{0.4, -0.1}) - cplx{-1.0}) < 1e-15);
    CHECK(std::abs(mobius_deriv(0.5, 0.0) - cplx{-0.75}) < 1e-15);

    std::mt19937_64 rng(12);
    const auto zs = random_points(rng, 30, 0.9);
    const auto ws = random_points(rng, 30, 0.9);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double h = 1e-5;
        const cplx w = ws[i].value();
        const cplx fd = (mobius_eval(zs[i], w + h).value() - mobius_eval(zs[i], w - h).value()) / (2 * h);
        const cplx d = mobius_deriv(zs[i], ws[i]);
        CHECK(std::abs(fd - d) <= 1e-8 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("bergman kernels") {
    CHECK(std::abs(bergman_kernel(0.0, cplx{0.3, 0.7}) - cplx{1.0}) < 1e-15);
    CHECK(std::abs(bergman_kernel(0.5, 0.5) - cplx{16.0 / 9.0}) < 1e-14);
    CHECK(std::abs(normalized_kernel(0.0, cplx{-0.2, 0.6}) - cplx{1.0}) < 1e-15);

    std::mt19937_64 rng(13);
    const auto zs = random_points(rng, 25, 0.95);
    const auto ws = random_points(rng, 25, 0.95);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(std::abs(bergman_kernel(zs[i], ws[i]) - std::conj(bergman_kernel(ws[i], zs[i]))) < 1e-12);
        CHECK(normalized_kernel(zs[i], ws[i]) == zs[i].gap() * bergman_kernel(zs[i], ws[i]));
        CHECK(std::abs(bergman_kernel(zs[i], zs[i]) - 1.0 / (zs[i].gap() * zs[i].gap())) <
              1e-12 * std::abs(bergman_kernel(zs[i], zs[i])));
    }
}

TEST_CASE("normalized kernel has unit norm") {
    const auto rule = build_rule();
    const DiskPoint z{0.7};
    const cplx n2 = integrate(rule, [&](DiskPoint w) { return cplx{std::norm(normalized_kernel(z, w))}; });
    CHECK(std::abs(n2 - 1.0) < 1e-8);
}

TEST_CASE("kernel reproduces polynomials") {
    const auto rule = build_rule();
    const std::vector<cplx> p{{0.5, -1.0}, {2.0, 0.0}, {0.0, 0.3}, {-1.0, 1.0}, {0.25, 0.0}};
    auto poly = [&](cplx w) {
        cplx s{0.0}, pw{1.0};
        for (const auto& c : p) {
            s += c * pw;
            pw *= w;
        }
        return s;
    };
    for (const cplx zc : {cplx{0.0}, cplx{0.3, 0.4}, cplx{-0.6, 0.1}, cplx{0.0, 0.8}}) {
        const DiskPoint z{zc};
        const cplx v = integrate(rule, [&](DiskPoint w) { return poly(w.value()) * std::conj(bergman_kernel(z, w)); });
        CHECK(std::abs(v - poly(zc)) < 1e-11);
    }
}
