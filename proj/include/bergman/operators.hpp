#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bergman/disk.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kDefaultTruncation = 64;

/// Compression of a bounded operator on L^2_a to span{e_0, ..., e_{N-1}},
/// e_n(w) = sqrt(n + 1) w^n.  entry(q, p) = <S e_p, e_q>.
class TruncatedOperator {
public:
    /// Throws std::invalid_argument for an empty, non-square or non-finite matrix.
    explicit TruncatedOperator(Matrix entries);

    static TruncatedOperator identity(int dim);
    static TruncatedOperator zero(int dim);

    [[nodiscard]] int dim() const { return static_cast<int>(m_.rows()); }
    [[nodiscard]] const Matrix& matrix() const { return m_; }
    [[nodiscard]] cplx entry(int q, int p) const { return m_(q, p); }
    /// Leading k x k block.
    [[nodiscard]] TruncatedOperator leading_block(int k) const;

private:
    Matrix m_;
};

TruncatedOperator op_mul(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_add(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_sub(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_scale(const TruncatedOperator& a, cplx s);
TruncatedOperator op_adjoint(const TruncatedOperator& a);
/// AB - BA
TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b);
double op_norm_fro(const TruncatedOperator& a);
/// Spectral norm by power iteration on A^* A.
double op_norm_2(const TruncatedOperator& a, int max_iter = 500, double rel_tol = 1e-13);
/// Largest entry modulus of a - b.
double max_abs_diff(const TruncatedOperator& a, const TruncatedOperator& b);

/// <T_u e_p, e_q> by the moment formula; rows x cols block of the infinite matrix.
Matrix toeplitz_block(const MonomialSymbol& u, int rows, int cols);
TruncatedOperator toeplitz_exact(const MonomialSymbol& u, int n);

/// T_f for analytic f = sum c_m w^m given by Taylor coefficients; rows x cols block.
Matrix analytic_toeplitz_block(const std::vector<cplx>& taylor, int rows, int cols);

struct QuadratureToeplitz {
    TruncatedOperator op;
    /// Rule error on the monomial moments this compression needs.
    double moment_residual = 0.0;
    bool rule_sufficient = true;
};

/// <f e_p, e_q> by quadrature.  symbol_degree is the total degree of f when
/// it is a polynomial (0 otherwise); it only feeds the sufficiency check.
QuadratureToeplitz toeplitz_quadrature(const Evaluator& f, int n, const DiskQuadrature& rule,
                                       int symbol_degree = 0);

/// Leading rows x cols block of U_z f = (f o phi_z) phi_z'.  Exact entries.
Matrix unitary_uz_block(DiskPoint z, int rows, int cols);
TruncatedOperator unitary_uz(DiskPoint z, int n);

/// Rows needed so that the first `cols` columns of U_z lose less than `eps`
/// per entry.  Column p of U_z lives up to degree ~ p (1 + |z|) / (1 - |z|).
int uz_working_rows(DiskPoint z, int cols, double eps = 1e-17);

enum class CovarianceRoute {
    /// U_z and T_u built with uz_working_rows, then compressed to n.
    Oversampled,
    /// Plain product of the n x n compressions.
    Compressed,
};

/// Compression of U_z T_u U_z (= T_{u o phi_z}).
TruncatedOperator covariant_toeplitz(const MonomialSymbol& u, DiskPoint z, int n,
                                     CovarianceRoute route = CovarianceRoute::Oversampled);

/// out_dim x out_dim block of U_z S U_z, S extended by zero outside its block.
TruncatedOperator conjugate_by_uz(const TruncatedOperator& s, DiskPoint z, int out_dim);

/// 2 T_{uv} - T_u T_v - T_v T_u from n x n compressions.
TruncatedOperator semicommutator_defect(const MonomialSymbol& u, const MonomialSymbol& v, int n);

/// Compression of T_{conj f} T_g - T_g T_{conj f} for analytic f, g given by
/// Taylor coefficients.  `rows` bounds the inner sum of T_{conj f} T_g; the
/// other product is exact within the block.
TruncatedOperator analytic_commutator(const std::vector<cplx>& f, const std::vector<cplx>& g,
                                      int n, int rows);

}  // namespace bergman
