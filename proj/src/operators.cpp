#include "bergman/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bergman {

namespace {

void require_same_dim(const TruncatedOperator& a, const TruncatedOperator& b, const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
}

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " needs a dimension >= 1");
}

// x / (1 - zb w) as power series, in place.
void divide_by_kernel_factor(std::vector<cplx>& x, cplx zb) {
    for (std::size_t i = 1; i < x.size(); ++i) x[i] += zb * x[i - 1];
}

}  // namespace

TruncatedOperator::TruncatedOperator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols())
        throw std::invalid_argument("truncated operator needs a nonempty square matrix");
    if (!m_.allFinite()) throw std::invalid_argument("truncated operator has non-finite entries");
}

TruncatedOperator TruncatedOperator::identity(int dim) {
    require_positive(dim, "identity");
    return TruncatedOperator{Matrix::Identity(dim, dim)};
}

TruncatedOperator TruncatedOperator::zero(int dim) {
    require_positive(dim, "zero");
    return TruncatedOperator{Matrix::Zero(dim, dim)};
}

TruncatedOperator TruncatedOperator::leading_block(int k) const {
    if (k < 1 || k > dim()) throw std::invalid_argument("leading_block: block size out of range");
    return TruncatedOperator{m_.topLeftCorner(k, k)};
}

TruncatedOperator op_mul(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b, "op_mul");
    return TruncatedOperator{a.matrix() * b.matrix()};
}

TruncatedOperator op_add(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b, "op_add");
    return TruncatedOperator{a.matrix() + b.matrix()};
}

TruncatedOperator op_sub(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b, "op_sub");
    return TruncatedOperator{a.matrix() - b.matrix()};
}

TruncatedOperator op_scale(const TruncatedOperator& a, cplx s) {
    return TruncatedOperator{a.matrix() * s};
}

TruncatedOperator op_adjoint(const TruncatedOperator& a) {
    return TruncatedOperator{a.matrix().adjoint()};
}

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b, "commutator");
    return TruncatedOperator{a.matrix() * b.matrix() - b.matrix() * a.matrix()};
}

double op_norm_fro(const TruncatedOperator& a) { return a.matrix().norm(); }

double op_norm_2(const TruncatedOperator& a, int max_iter, double rel_tol) {
    const Matrix gram = a.matrix().adjoint() * a.matrix();
    // Deterministic start with every component nonzero.
    Vector v(a.dim());
    for (int i = 0; i < a.dim(); ++i) v(i) = cplx{1.0 + 0.01 * i, 0.003 * i};
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vector next = gram * v;
        const double nrm = next.norm();
        if (nrm == 0.0) return 0.0;
        next /= nrm;
        const double prev = lambda;
        lambda = nrm;
        v = std::move(next);
        if (it > 0 && std::abs(lambda - prev) <= rel_tol * lambda) break;
    }
    return std::sqrt(lambda);
}

double max_abs_diff(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b, "max_abs_diff");
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Matrix toeplitz_block(const MonomialSymbol& u, int rows, int cols) {
    require_positive(rows, "toeplitz_block");
    require_positive(cols, "toeplitz_block");
    Matrix m = Matrix::Zero(rows, cols);
    for (const auto& [e, c] : u.terms()) {
        for (int p = 0; p < cols; ++p) {
            const int q = p + e.j - e.k;
            if (q < 0 || q >= rows) continue;
            m(q, p) += c * std::sqrt((p + 1.0) * (q + 1.0)) / (e.j + p + 1.0);
        }
    }
    return m;
}

TruncatedOperator toeplitz_exact(const MonomialSymbol& u, int n) {
    return TruncatedOperator{toeplitz_block(u, n, n)};
}

Matrix analytic_toeplitz_block(const std::vector<cplx>& taylor, int rows, int cols) {
    require_positive(rows, "analytic_toeplitz_block");
    require_positive(cols, "analytic_toeplitz_block");
    Matrix m = Matrix::Zero(rows, cols);
    const int len = static_cast<int>(taylor.size());
    for (int p = 0; p < cols; ++p)
        for (int q = p; q < rows && q - p < len; ++q)
            m(q, p) = taylor[static_cast<std::size_t>(q - p)] * std::sqrt((p + 1.0) / (q + 1.0));
    return m;
}

QuadratureToeplitz toeplitz_quadrature(const Evaluator& f, int n, const DiskQuadrature& rule,
                                       int symbol_degree) {
    require_positive(n, "toeplitz_quadrature");
    const auto& nodes = rule.nodes();
    const auto& weights = rule.weights();
    const auto count = static_cast<Eigen::Index>(nodes.size());
    Matrix basis(count, n);
    Vector weighted(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const cplx w = nodes[static_cast<std::size_t>(i)];
        cplx pw{1.0};
        for (int p = 0; p < n; ++p) {
            basis(i, p) = std::sqrt(p + 1.0) * pw;
            pw *= w;
        }
        weighted(i) = weights[static_cast<std::size_t>(i)] * f(DiskPoint{w});
    }
    Matrix entries = basis.adjoint() * weighted.asDiagonal() * basis;
    const int needed = n - 1 + std::max(symbol_degree, 0);
    const double residual = moment_residual(rule, needed);
    const bool ok = needed <= rule.exactness_degree() && residual <= 1e-12;
    return {TruncatedOperator{std::move(entries)}, residual, ok};
}

Matrix unitary_uz_block(DiskPoint z, int rows, int cols) {
    require_positive(rows, "unitary_uz_block");
    require_positive(cols, "unitary_uz_block");
    const cplx zv = z.value();
    const cplx zb = std::conj(zv);
    const double gap = z.gap();
    Matrix u(rows, cols);
    std::vector<double> inv_norm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) inv_norm[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(i + 1.0);

    // power series of phi_z^p, starting at p = 0
    std::vector<cplx> power(static_cast<std::size_t>(rows), cplx{0.0});
    power[0] = 1.0;
    std::vector<cplx> col;
    for (int p = 0; p < cols; ++p) {
        col = power;
        divide_by_kernel_factor(col, zb);
        divide_by_kernel_factor(col, zb);
        const double scale = -gap * std::sqrt(p + 1.0);
        for (int i = 0; i < rows; ++i)
            u(i, p) = scale * col[static_cast<std::size_t>(i)] * inv_norm[static_cast<std::size_t>(i)];
        // power <- power * (z - w) / (1 - zb w)
        for (int i = rows - 1; i >= 0; --i) {
            const auto k = static_cast<std::size_t>(i);
            power[k] = zv * power[k] - (i > 0 ? power[k - 1] : cplx{0.0});
        }
        divide_by_kernel_factor(power, zb);
    }
    return u;
}

TruncatedOperator unitary_uz(DiskPoint z, int n) {
    return TruncatedOperator{unitary_uz_block(z, n, n)};
}

int uz_working_rows(DiskPoint z, int cols, double eps) {
    require_positive(cols, "uz_working_rows");
    if (z.abs() == 0.0) return cols;
    const double r = z.abs();
    auto rows = static_cast<long>(std::ceil(1.5 * cols * (1.0 + r) / (1.0 - r))) + 64;
    constexpr long kMaxRows = 1L << 20;
    while (rows <= kMaxRows) {
        const Matrix block = unitary_uz_block(z, static_cast<int>(rows), cols);
        long last = 0;
        for (long i = rows - 1; i >= 0; --i) {
            if (block.row(i).cwiseAbs().maxCoeff() > eps) {
                last = i;
                break;
            }
        }
        if (last < rows * 3 / 4) return static_cast<int>(std::max<long>(cols, last + 1));
        rows *= 2;
    }
    throw std::runtime_error("uz_working_rows: |z| too close to the boundary for " +
                             std::to_string(cols) + " columns");
}

TruncatedOperator covariant_toeplitz(const MonomialSymbol& u, DiskPoint z, int n,
                                     CovarianceRoute route) {
    require_positive(n, "covariant_toeplitz");
    if (route == CovarianceRoute::Compressed) {
        const Matrix uz = unitary_uz_block(z, n, n);
        return TruncatedOperator{uz * toeplitz_block(u, n, n) * uz};
    }
    const int rows = uz_working_rows(z, n);
    const Matrix uz = unitary_uz_block(z, rows, n);
    // U_z is self-adjoint, so its leading n rows are uz^*.
    return TruncatedOperator{uz.adjoint() * toeplitz_block(u, rows, rows) * uz};
}

TruncatedOperator conjugate_by_uz(const TruncatedOperator& s, DiskPoint z, int out_dim) {
    const Matrix uz = unitary_uz_block(z, out_dim, s.dim());
    return TruncatedOperator{uz * s.matrix() * uz.adjoint()};
}

TruncatedOperator semicommutator_defect(const MonomialSymbol& u, const MonomialSymbol& v, int n) {
    const Matrix tu = toeplitz_block(u, n, n);
    const Matrix tv = toeplitz_block(v, n, n);
    const Matrix tuv = toeplitz_block(sym_multiply(u, v), n, n);
    return TruncatedOperator{2.0 * tuv - tu * tv - tv * tu};
}

TruncatedOperator analytic_commutator(const std::vector<cplx>& f, const std::vector<cplx>& g,
                                      int n, int rows) {
    rows = std::max(rows, n);
    const Matrix tf = analytic_toeplitz_block(f, rows, n);
    const Matrix tg = analytic_toeplitz_block(g, rows, n);
    const Matrix fbar_g = tf.adjoint() * tg;
    const Matrix g_fbar = tg.topRows(n) * tf.topRows(n).adjoint();
    return TruncatedOperator{fbar_g - g_fbar};
}

}  // namespace bergman
