#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        // P_n and P_n' at x from the three-term recurrence
        auto legendre = [n](double t) {
            double pn = t, pm = 1.0;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * t * pn - (k - 1.0) * pm) / k;
                pm = pn;
                pn = pk;
            }
            return std::pair{pn, n * (t * pn - pm) / (t * t - 1.0)};
        };
        for (int iter = 0; iter < 100; ++iter) {
            const auto [pn, dp] = legendre(x);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

DiskQuadrature::DiskQuadrature(int n_radial, int n_angular) : n_angular_(n_angular) {
    if (n_radial < 1 || n_angular < 1)
        throw std::invalid_argument("disk quadrature needs n_radial >= 1 and n_angular >= 1");
    std::vector<double> x, w;
    gauss_legendre(n_radial, x, w);
    radial_s_.resize(x.size());
    radial_w_.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        radial_s_[i] = 0.5 * (x[i] + 1.0);
        radial_w_[i] = 0.5 * w[i];
    }
    nodes_.reserve(radial_s_.size() * static_cast<std::size_t>(n_angular));
    weights_.reserve(nodes_.capacity());
    for (std::size_t i = 0; i < radial_s_.size(); ++i) {
        const double r = std::sqrt(radial_s_[i]);
        for (int t = 0; t < n_angular; ++t) {
            nodes_.push_back(std::polar(r, 2.0 * std::numbers::pi * t / n_angular));
            weights_.push_back(radial_w_[i] / n_angular);
        }
    }
}

int DiskQuadrature::exactness_degree() const {
    return std::min(2 * n_radial() - 1, n_angular_ - 1);
}

DiskQuadrature build_rule(int n_radial, int n_angular) { return {n_radial, n_angular}; }

cplx integrate(const DiskQuadrature& rule, const Evaluator& f) {
    // ring by ring keeps the rounding of the 10^4-term sum near 1e-16
    const auto& nodes = rule.nodes();
    const auto ring = static_cast<std::size_t>(rule.n_angular());
    cplx total{0.0};
    for (std::size_t i = 0; i < rule.radial_s().size(); ++i) {
        cplx ring_sum{0.0};
        for (std::size_t t = 0; t < ring; ++t) ring_sum += f(DiskPoint{nodes[i * ring + t]});
        total += rule.radial_weights()[i] * ring_sum / static_cast<double>(ring);
    }
    return total;
}

cplx monomial_moment(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("monomial moments need a, b >= 0");
    return a == b ? cplx{1.0 / (a + 1.0)} : cplx{0.0};
}

double moment_residual(const DiskQuadrature& rule, int max_degree) {
    // The angular trapezoid sum of e^{i m theta} is 1 when n_angular | m, else 0
    // (exactly, up to the rounding of the nodes), so only those (a, b) contribute.
    const auto& s = rule.radial_s();
    const auto& ws = rule.radial_weights();
    double worst = 0.0;
    for (int a = 0; a <= max_degree; ++a) {
        for (int b = 0; b <= max_degree; ++b) {
            if ((a - b) % rule.n_angular() != 0) continue;
            double radial = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) radial += ws[i] * std::pow(s[i], 0.5 * (a + b));
            worst = std::max(worst, std::abs(radial - monomial_moment(a, b).real()));
        }
    }
    return worst;
}

}  // namespace bergman
