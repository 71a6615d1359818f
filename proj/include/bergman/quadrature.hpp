#pragma once

#include <vector>

#include "bergman/disk.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

/// Product rule for the normalized area measure dA on D (|D| = 1):
/// Gauss-Legendre in s = r^2 on [0, 1] times the trapezoid rule in angle.
class DiskQuadrature {
public:
    static constexpr int kDefaultRadial = 80;
    static constexpr int kDefaultAngular = 256;

    DiskQuadrature(int n_radial, int n_angular);

    [[nodiscard]] int n_radial() const { return static_cast<int>(radial_s_.size()); }
    [[nodiscard]] int n_angular() const { return n_angular_; }
    /// Nodes in s = r^2 and their weights (summing to 1).
    [[nodiscard]] const std::vector<double>& radial_s() const { return radial_s_; }
    [[nodiscard]] const std::vector<double>& radial_weights() const { return radial_w_; }
    [[nodiscard]] const std::vector<cplx>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }

    /// w^a conj(w)^b is integrated exactly for a, b <= exactness_degree().
    [[nodiscard]] int exactness_degree() const;

private:
    std::vector<double> radial_s_;
    std::vector<double> radial_w_;
    int n_angular_;
    std::vector<cplx> nodes_;
    std::vector<double> weights_;
};

/// Equivalent to build_rule(n_radial, n_angular).
DiskQuadrature build_rule(int n_radial = DiskQuadrature::kDefaultRadial,
                          int n_angular = DiskQuadrature::kDefaultAngular);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

cplx integrate(const DiskQuadrature& rule, const Evaluator& f);

/// Exact value of the integral of w^a conj(w)^b dA: delta_{ab} / (a + 1).
cplx monomial_moment(int a, int b);

/// max over a, b <= max_degree of |rule(w^a conj(w)^b) - monomial_moment(a, b)|,
/// evaluated from the rule's radial and angular factors.
double moment_residual(const DiskQuadrature& rule, int max_degree);

}  // namespace bergman
