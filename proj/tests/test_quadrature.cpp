#include <doctest.h>

#include <cmath>
#include <random>

#include "bergman/quadrature.hpp"
#include "test_support.hpp"

using namespace bergman;

namespace {

// Polar oracle for the moment: (1/pi) int_0^1 int_0^{2pi} r^{a+b+1} e^{i(a-b)t} dt dr.
double polar_moment(int a, int b) { return a == b ? 2.0 / (a + b + 2.0) : 0.0; }

cplx monomial_integral(const DiskQuadrature& rule, int a, int b) {
    return integrate(rule, [=](DiskPoint w) { return std::pow(w.value(), a) * std::pow(std::conj(w.value()), b); });
}

}  // namespace

TEST_CASE("gauss-legendre") {
    std::vector<double> x, w;
    gauss_legendre(2, x, w);
    CHECK(x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-15));
    gauss_legendre(1, x, w);
    CHECK(std::abs(x[0]) < 1e-15);
    CHECK(w[0] == doctest::Approx(2.0));
    for (int n : {5, 33, 80, 200}) {
        gauss_legendre(n, x, w);
        double sum = 0.0, m4 = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += w[i];
            m4 += w[i] * std::pow(x[i], 4);
            if (i > 0) CHECK(x[i] > x[i - 1]);
        }
        CHECK(std::abs(sum - 2.0) < 1e-13);
        if (n >= 3) CHECK(std::abs(m4 - 0.4) < 1e-13);
    }
    CHECK_THROWS_AS(gauss_legendre(0, x, w), std::invalid_argument);
}

TEST_CASE("rule structure") {
    const auto rule = build_rule();
    CHECK(rule.n_radial() == 80);
    CHECK(rule.n_angular() == 256);
    CHECK(rule.size() == 80u * 256u);
    CHECK(rule.exactness_degree() == 159);
    long double total = 0.0L;
    for (double w : rule.weights()) {
        CHECK(w > 0.0);
        total += w;
    }
    CHECK(std::abs(static_cast<double>(total) - 1.0) < 1e-14);
    for (const auto& n : rule.nodes()) CHECK(std::abs(n) < 1.0);
    CHECK(build_rule(3, 7).exactness_degree() == 5);
    CHECK_THROWS_AS(build_rule(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_rule(4, 0), std::invalid_argument);
}

TEST_CASE("integrate monomials") {
    const auto rule = build_rule();
    CHECK(std::abs(integrate(rule, [](DiskPoint) { return cplx{1.0}; }) - 1.0) < 1e-14);
    CHECK(std::abs(monomial_integral(rule, 1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(monomial_integral(rule, 2, 2) - 1.0 / 3.0) < 1e-14);
    CHECK(std::abs(monomial_integral(rule, 1, 2)) < 1e-14);
}

TEST_CASE("monomial_moment") {
    CHECK(monomial_moment(0, 0) == cplx{1.0});
    CHECK(monomial_moment(1, 1) == cplx{0.5});
    CHECK(monomial_moment(2, 1) == cplx{0.0});
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) CHECK(std::abs(monomial_moment(a, b) - polar_moment(a, b)) < 1e-16);
    CHECK_THROWS_AS(monomial_moment(-1, 0), std::invalid_argument);
}

TEST_CASE("rule matches the moment oracle") {
    const auto rule = build_rule();
    double worst = 0.0;
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= 40; ++b)
            worst = std::max(worst, std::abs(monomial_integral(rule, a, b) - monomial_moment(a, b)));
    CHECK(worst <= 1e-13);
    CHECK(moment_residual(rule, rule.exactness_degree()) <= 1e-13);
    // a coarse rule is caught by the residual
    CHECK(moment_residual(build_rule(4, 8), 12) > 1e-3);
}

TEST_CASE("doubling the rule is self-consistent") {
    const auto base = build_rule(40, 128);
    const auto fine = build_rule(80, 256);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 5; ++i) {
        const auto u = bergman::testing::random_symbol(rng, 60, 6);
        const auto f = evaluator(u);
        CHECK(std::abs(integrate(base, f) - integrate(fine, f)) < 1e-10 * coeff_l1(u));
    }
}
