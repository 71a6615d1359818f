#include <doctest.h>

#include <random>

#include "bergman/operators.hpp"
#include "test_support.hpp"

using namespace bergman;
using namespace bergman::testing;

namespace {

const MonomialSymbol kW = MonomialSymbol::monomial(1, 0);
const MonomialSymbol kWbar = MonomialSymbol::monomial(0, 1);
const MonomialSymbol kAbs2 = MonomialSymbol::monomial(1, 1);

// <u e_p, e_q> = sum c sqrt((p+1)(q+1)) int w^{j+p} conj(w)^{k+q} dA
Matrix moment_oracle(const MonomialSymbol& u, int n) {
    Matrix m = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            for (const auto& [e, c] : u.terms())
                m(q, p) += c * std::sqrt((p + 1.0) * (q + 1.0)) * monomial_moment(e.j + p, e.k + q);
    return m;
}

double block_diff(const Matrix& a, const Matrix& b, int k) {
    return (a.topLeftCorner(k, k) - b.topLeftCorner(k, k)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("truncated operator invariants") {
    CHECK_THROWS_AS(TruncatedOperator(Matrix(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedOperator(Matrix::Zero(2, 3)), std::invalid_argument);
    Matrix bad = Matrix::Zero(2, 2);
    bad(1, 0) = cplx{std::numeric_limits<double>::infinity(), 0.0};
    CHECK_THROWS_AS(TruncatedOperator{bad}, std::invalid_argument);
    std::mt19937_64 rng(41);
    const auto s = toeplitz_exact(random_symbol(rng, 4, 6), 12);
    CHECK(op_adjoint(op_adjoint(s)).matrix() == s.matrix());
    CHECK(s.leading_block(5).dim() == 5);
    CHECK_THROWS_AS((void)s.leading_block(13), std::invalid_argument);
}

TEST_CASE("toeplitz_exact") {
    CHECK(toeplitz_exact(MonomialSymbol{1.0}, 10).matrix() == Matrix::Identity(10, 10));
    CHECK(std::abs(toeplitz_exact(kWbar, 4).entry(0, 1) - std::sqrt(2.0) / 2.0) < 1e-15);
    const auto t = toeplitz_exact(kAbs2, 4);
    CHECK(std::abs(t.entry(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(t.entry(1, 1) - 2.0 / 3.0) < 1e-15);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 10; ++i) {
        const auto u = random_symbol(rng, 6, 6);
        CHECK(block_diff(toeplitz_exact(u, 16).matrix(), moment_oracle(u, 16), 16) < 1e-13 * coeff_l1(u));
        // T_{conj u} = T_u^*
        CHECK(max_abs_diff(toeplitz_exact(sym_conjugate(u), 16), op_adjoint(toeplitz_exact(u, 16))) < 1e-15 * coeff_l1(u));
        const auto v = random_symbol(rng, 6, 4);
        const cplx s = random_coeff(rng);
        CHECK(max_abs_diff(toeplitz_exact(u + s * v, 16),
                           op_add(toeplitz_exact(u, 16), op_scale(toeplitz_exact(v, 16), s))) < 1e-13 * (coeff_l1(u) + coeff_l1(v) * std::abs(s)));
    }
}

TEST_CASE("analytic toeplitz from taylor coefficients") {
    const MonomialSymbol f = MonomialSymbol{2.0} + MonomialSymbol::monomial(1, 0, cplx{0, 1}) + MonomialSymbol::monomial(3, 0, -0.5);
    const std::vector<cplx> taylor{2.0, cplx{0, 1}, 0.0, -0.5};
    CHECK((analytic_toeplitz_block(taylor, 12, 12) - toeplitz_block(f, 12, 12)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("toeplitz_quadrature") {
    const auto rule = build_rule();
    auto id = toeplitz_quadrature([](DiskPoint) { return cplx{1.0}; }, 32, rule);
    CHECK(id.rule_sufficient);
    CHECK(max_abs_diff(id.op, TruncatedOperator::identity(32)) < 1e-12);
    auto q = toeplitz_quadrature(evaluator(kAbs2), 32, rule, 2);
    CHECK(max_abs_diff(q.op, toeplitz_exact(kAbs2, 32)) < 1e-10);

    std::mt19937_64 rng(43);
    const auto u = random_symbol(rng, 8, 8);
    CHECK(max_abs_diff(toeplitz_quadrature(evaluator(u), 64, rule, 8).op, toeplitz_exact(u, 64)) < 1e-10 * coeff_l1(u));

    auto coarse = toeplitz_quadrature(evaluator(kAbs2), 32, build_rule(8, 16), 2);
    CHECK_FALSE(coarse.rule_sufficient);
    CHECK(coarse.moment_residual > 1e-6);
}

TEST_CASE("unitary_uz") {
    const auto u0 = unitary_uz(0.0, 16);
    for (int q = 0; q < 16; ++q)
        for (int p = 0; p < 16; ++p)
            CHECK(std::abs(u0.entry(q, p) - (q == p ? cplx{p % 2 == 0 ? -1.0 : 1.0} : cplx{0.0})) < 1e-15);

    for (const cplx zc : {cplx{0.3}, cplx{0.0, -0.5}, cplx{0.4, 0.5}}) {
        const DiskPoint z{zc};
        const auto u = unitary_uz(z, 32);
        // U_z 1 = -k_z, k_z = (1-|z|^2) sum sqrt(j+1) conj(z)^j e_j
        for (int j = 0; j < 32; ++j)
            CHECK(std::abs(u.entry(j, 0) + z.gap() * std::sqrt(j + 1.0) * std::pow(std::conj(zc), j)) < 1e-14);
        // self-adjoint
        CHECK((u.matrix() - u.matrix().adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    }

    // entries against quadrature of sqrt(p+1) phi^p phi' conj(e_q)
    const DiskPoint z{cplx{0.3, -0.2}};
    const auto rule = build_rule();
    const auto u = unitary_uz(z, 8);
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            const cplx v = integrate(rule, [&](DiskPoint w) {
                return std::sqrt(p + 1.0) * std::pow(mobius_eval(z, w).value(), p) * mobius_deriv(z, w) *
                       std::sqrt(q + 1.0) * std::pow(std::conj(w.value()), q);
            });
            CHECK(std::abs(v - u.entry(q, p)) < 1e-12);
        }
    }
}

TEST_CASE("unitary_uz squares to the identity with enough rows") {
    for (const cplx zc : {cplx{0.7}, cplx{0.0, 0.7}, cplx{-0.42, 0.56}, cplx{0.3}}) {
        const DiskPoint z{zc};
        const int n = 64;
        const int rows = uz_working_rows(z, n);
        CHECK(rows > n);
        const Matrix block = unitary_uz_block(z, rows, n);
        // (U_z^2) on the leading block = Gram matrix of the columns
        const Matrix square = block.adjoint() * block;
        CHECK(block_diff(square, Matrix::Identity(n, n), n / 2) <= 1e-8);
        CHECK(block_diff(square, Matrix::Identity(n, n), n) <= 1e-8);
    }
    CHECK(uz_working_rows(0.0, 20) == 20);
}

TEST_CASE("plain compression of U_z loses the half block") {
    // column p spreads to degree ~ p (1 + |z|) / (1 - |z|); the n x n square is not the identity
    const DiskPoint z{0.7};
    const Matrix u = unitary_uz(z, 64).matrix();
    CHECK(block_diff(u * u, Matrix::Identity(64, 64), 32) > 0.1);
    CHECK(block_diff(u * u, Matrix::Identity(64, 64), 4) < 1e-6);
}

TEST_CASE("covariant_toeplitz") {
    CHECK(max_abs_diff(covariant_toeplitz(kW, 0.0, 16), op_scale(toeplitz_exact(kW, 16), -1.0)) < 1e-15);
    CHECK(max_abs_diff(covariant_toeplitz(MonomialSymbol{1.0}, cplx{0.5, 0.2}, 32), TruncatedOperator::identity(32)) < 1e-12);

    const auto rule = build_rule();
    for (const auto& u : {kW, kWbar, kAbs2}) {
        const DiskPoint z{0.5};
        const auto quad = toeplitz_quadrature(composed_evaluator(u, z), 32, rule);
        CHECK(block_diff(covariant_toeplitz(u, z, 32).matrix(), quad.op.matrix(), 16) < 1e-8);
        const DiskPoint z2{cplx{-0.3, 0.6}};
        const auto quad2 = toeplitz_quadrature(composed_evaluator(u, z2), 64, rule);
        CHECK(block_diff(covariant_toeplitz(u, z2, 64).matrix(), quad2.op.matrix(), 32) < 1e-8);
    }
}

TEST_CASE("compressed covariance residual shrinks as N doubles") {
    const auto rule = build_rule();
    for (const auto& u : {kW, kAbs2}) {
        const DiskPoint z{cplx{0.35, 0.35}};
        const auto ref = toeplitz_quadrature(composed_evaluator(u, z), 16, rule).op;
        double prev = 1e300;
        for (int n : {16, 32, 64, 128}) {
            const auto c = covariant_toeplitz(u, z, n, CovarianceRoute::Compressed);
            const double r = block_diff(c.matrix(), ref.matrix(), 8);
            CHECK(r <= std::max(prev, 1e-12));
            prev = r;
        }
        CHECK(prev < 1e-9);
    }
}

TEST_CASE("matrix algebra") {
    std::mt19937_64 rng(44);
    const auto a = toeplitz_exact(random_symbol(rng, 3, 5), 10);
    const auto b = toeplitz_exact(random_symbol(rng, 3, 5), 10);
    CHECK(op_norm_fro(commutator(TruncatedOperator::identity(10), a)) == 0.0);
    CHECK(op_adjoint(toeplitz_exact(kW, 20)).matrix() == toeplitz_exact(kWbar, 20).matrix());
    CHECK(op_norm_fro(TruncatedOperator::zero(7)) == 0.0);
    CHECK(max_abs_diff(commutator(a, b), op_sub(op_mul(a, b), op_mul(b, a))) < 1e-14);
    const auto c = toeplitz_exact(kW, 11);
    CHECK_THROWS_AS(op_mul(a, c), std::invalid_argument);
    CHECK_THROWS_AS(op_add(a, c), std::invalid_argument);
    CHECK_THROWS_AS(commutator(a, c), std::invalid_argument);
    CHECK(std::abs(op_norm_2(TruncatedOperator::identity(5)) - 1.0) < 1e-12);
    const Eigen::JacobiSVD<Matrix> svd(a.matrix());
    CHECK(std::abs(op_norm_2(a) - svd.singularValues()(0)) < 1e-8);
}

TEST_CASE("toeplitz compressions are contractive") {
    const auto rule = build_rule();
    std::mt19937_64 rng(45);
    for (int i = 0; i < 8; ++i) {
        const auto u = random_symbol(rng, 5, 4);
        double sup = 0.0;
        for (const auto& w : rule.nodes()) sup = std::max(sup, std::abs(sym_evaluate(u, w)));
        for (int n : {8, 32, 64}) CHECK(op_norm_2(toeplitz_exact(u, n)) <= sup + 1e-6);
    }
}

TEST_CASE("semicommutator_defect") {
    CHECK(op_norm_fro(semicommutator_defect(MonomialSymbol{1.0}, MonomialSymbol{1.0}, 16)) == 0.0);
    CHECK(std::abs(semicommutator_defect(kW, kWbar, 16).entry(0, 0) - 0.5) < 1e-15);
    std::mt19937_64 rng(46);
    for (int i = 0; i < 5; ++i) {
        MonomialSymbol f, g;
        for (int d = 0; d <= 4; ++d) {
            f.add(d, 0, random_coeff(rng));
            g.add(d, 0, random_coeff(rng));
        }
        CHECK(op_norm_fro(semicommutator_defect(f, g, 32)) < 1e-12 * coeff_l1(f) * coeff_l1(g));
        // exact commutator compression agrees away from the corner
        std::vector<cplx> tf(5), tg(5);
        for (int d = 0; d <= 4; ++d) {
            tf[d] = f.coeff(d, 0);
            tg[d] = g.coeff(d, 0);
        }
        const auto exact = analytic_commutator(tf, tg, 32, 40);
        const auto defect = semicommutator_defect(sym_conjugate(f), g, 32);
        CHECK(block_diff(exact.matrix(), defect.matrix(), 27) < 1e-12 * coeff_l1(f) * coeff_l1(g));
    }
    // T_conj(w) T_w - T_w T_conj(w) is diagonal with 1/((p+1)(p+2))
    const auto comm = analytic_commutator({0.0, 1.0}, {0.0, 1.0}, 20, 21);
    for (int p = 0; p < 20; ++p) CHECK(std::abs(comm.entry(p, p) - 1.0 / ((p + 1.0) * (p + 2.0))) < 1e-15);
}
