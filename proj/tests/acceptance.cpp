// Acceptance run: one PASS/FAIL line per criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "bergman/suite.hpp"

using namespace bergman;

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* battery;
    double time_limit;  // seconds, 0 for none
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "harmonic symbols are fixed by the transform", "harmonic-fixed-point", 30.0},
        {2, "series, quadrature and matrix routes agree", "route-agreement", 0.0},
        {3, "Laplacian at 0 from two matrix entries", "laplacian-at-zero", 0.0},
        {4, "Laplacian at 0 from symbol moments", "laplacian-symbol-route", 0.0},
        {5, "covariance of Toeplitz operators under U_z", "covariance", 0.0},
        {6, "transform of Toeplitz products", "product-transform", 0.0},
        {7, "semicommutator transform identity", "semicommutator", 0.0},
        {8, "harmonic product classifier", "harmonic-product-classifier", 0.0},
        {9, "boundary decay of the analytic commutator", "boundary-decay", 60.0},
        {10, "quadrature reproduces monomial moments", "quadrature-moments", 0.0},
    };
    SuiteOptions options;  // N = 64, default rule and tolerances
    int failures = 0;
    for (const auto& c : criteria) {
        const auto r = run_battery(c.battery, options);
        const bool in_time = c.time_limit <= 0.0 || r.seconds < c.time_limit;
        const bool ok = r.passed && in_time;
        if (!ok) ++failures;
        std::printf("criterion %2d %s  %s (%.2f s%s)\n", c.id, ok ? "PASS" : "FAIL", c.title, r.seconds,
                    in_time ? "" : ", over time limit");
        for (const auto& ch : r.checks) {
            if (ch.tolerance)
                std::printf("      %-4s %s = %.3e (limit %.1e)\n", ch.passed ? "ok" : "BAD", ch.metric.c_str(),
                            ch.value, *ch.tolerance);
            else
                std::printf("      info %s = %.6g\n", ch.metric.c_str(), ch.value);
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
