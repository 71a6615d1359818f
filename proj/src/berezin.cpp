#include "bergman/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

namespace {

constexpr long kMaxSeriesTerms = 50'000'000;

// sum_{m>=0} (m+1)(m+d+1) x^m / (top+m+1), tail below tol
double monomial_series(int d, int top, double x, double tol) {
    double sum = 0.0;
    double xm = 1.0;
    for (long m = 0; m < kMaxSeriesTerms; ++m) {
        const double md = static_cast<double>(m);
        const double term = (md + 1.0) * (md + d + 1.0) * xm / (top + md + 1.0);
        sum += term;
        const double ratio = x * (md + 2.0) * (md + d + 2.0) / ((md + 1.0) * (md + d + 1.0));
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) < tol) return sum;
        xm *= x;
    }
    throw std::domain_error("berezin_symbol_series: series did not converge (|z| too close to 1)");
}

void check_schedule(const std::vector<double>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("decay profile needs a nonempty schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0 && schedule[i] < 1.0))
            throw std::invalid_argument("decay profile schedule must lie in (0, 1)");
        if (i > 0 && !(schedule[i] > schedule[i - 1]))
            throw std::invalid_argument("decay profile schedule must be increasing");
    }
}

std::vector<cplx> taylor_of(const MonomialSymbol& f) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(f.deg_z(), 0) + 1), cplx{0.0});
    for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e.j)] = v;
    return c;
}

cplx derivative_of(const AnalyticSymbol& f, DiskPoint z) {
    if (const auto* s = std::get_if<MonomialSymbol>(&f)) return sym_evaluate(wirtinger_dz(*s), z);
    return blaschke_deriv(std::get<BlaschkeProduct>(f), z);
}

// Rows after which the Taylor tail of every input is below ~1e-17.
int inner_rows_for(const AnalyticSymbol& f, int n) {
    if (const auto* s = std::get_if<MonomialSymbol>(&f)) return n + std::max(s->deg_z(), 0);
    const auto& zeros = std::get<BlaschkeProduct>(f).zeros();
    double r = 0.0;
    for (const auto& a : zeros) r = std::max(r, a.abs());
    if (r == 0.0) return n + static_cast<int>(zeros.size()) + 1;
    const double decay = std::log(1e-17) / std::log(r);
    const double growth = 8.0 * static_cast<double>(zeros.size());
    constexpr double kMaxRows = 40000.0;
    return n + static_cast<int>(std::min(kMaxRows, std::ceil(decay + growth / (1.0 - r))));
}

std::vector<cplx> taylor_of(const AnalyticSymbol& f, int rows) {
    if (const auto* s = std::get_if<MonomialSymbol>(&f)) return taylor_of(*s);
    return blaschke_taylor(std::get<BlaschkeProduct>(f), rows);
}

}  // namespace

void BerezinConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (trunc < 8) throw std::invalid_argument("truncation N must be >= 8");
    if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("quadrature sizes must be >= 1");
    if (!(fd_step > 0.0 && fd_step < 1.0)) throw std::invalid_argument("fd step must lie in (0, 1)");
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
}

cplx berezin_operator(const TruncatedOperator& s, DiskPoint z) {
    const int n = s.dim();
    Vector b(n);
    cplx pw{1.0};
    for (int i = 0; i < n; ++i) {
        b(i) = std::sqrt(i + 1.0) * pw;
        pw *= z.value();
    }
    const cplx quad = b.transpose() * s.matrix() * b.conjugate();
    const double g = z.gap();
    return g * g * quad;
}

bool within_reliable_radius(int n, DiskPoint z, double tol) {
    if (z.abs() == 0.0) return true;
    const double g = z.gap();
    const double log_tail = std::log(n + 1.0) + 2.0 * n * std::log(z.abs()) - 2.0 * std::log(g);
    return log_tail < std::log(tol);
}

double reliable_radius(int n, double tol) {
    double lo = 0.0, hi = 1.0 - kBoundaryMargin;
    if (within_reliable_radius(n, DiskPoint{hi}, tol)) return hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (within_reliable_radius(n, DiskPoint{mid}, tol) ? lo : hi) = mid;
    }
    return lo;
}

cplx berezin_symbol_series(const MonomialSymbol& u, DiskPoint z, double tol) {
    const double x = z.norm();
    const double g = z.gap();
    const double per_term_tol = tol / std::max<double>(1.0, static_cast<double>(u.terms().size()));
    cplx total{0.0};
    for (const auto& [e, c] : u.terms()) {
        const int d = e.j - e.k;
        const int top = std::max(e.j, e.k);
        const double sum = monomial_series(std::abs(d), top, x,
                                           per_term_tol / std::max(1.0, std::abs(c) * g * g));
        const cplx phase = d >= 0 ? std::pow(z.value(), d) : std::pow(std::conj(z.value()), -d);
        total += c * g * g * phase * sum;
    }
    return total;
}

cplx berezin_symbol_quadrature(const Evaluator& u, DiskPoint z, const DiskQuadrature& rule) {
    return integrate(rule, [&](DiskPoint w) {
        return u(w) * std::norm(normalized_kernel(z, w));
    });
}

bool quadrature_resolves(DiskPoint z, const DiskQuadrature& rule, double tol) {
    const double r = z.abs();
    if (r == 0.0) return true;
    // aliasing of the n-th angular harmonic of |k_z|^2, which carries (1-|z|^2)^2
    const double gap = z.gap();
    const double angular = 2.0 * rule.n_angular() * std::pow(r, rule.n_angular()) * gap * gap;
    // Gauss-Legendre in s meets the kernel singularity at s = 1/|z|^2.
    const double x = 2.0 / (r * r) - 1.0;
    const double rho = x + std::sqrt(x * x - 1.0);
    const double radial = std::pow(rho, -2.0 * rule.n_radial());
    return angular + radial < tol;
}

ProductBerezin berezin_of_product(const std::vector<MonomialSymbol>& factors, DiskPoint z, int n) {
    if (factors.empty()) throw std::invalid_argument("berezin_of_product needs at least one factor");
    Matrix product = Matrix::Identity(n, n);
    for (const auto& u : factors) product = product * toeplitz_block(u, n, n);
    const cplx left = berezin_operator(TruncatedOperator{product}, z);

    Vector x = Vector::Zero(n);
    x(0) = 1.0;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        x = covariant_toeplitz(*it, z, n).matrix() * x;
    const cplx right = x(0);
    return {left, right, std::abs(left - right)};
}

cplx laplacian_fd(const std::function<cplx(DiskPoint)>& field, DiskPoint z, double h0,
                  bool richardson) {
    const double h = h0 * (1.0 - z.abs());
    if (!(h > 0.0) || z.abs() + h > 1.0 - kBoundaryMargin)
        throw std::domain_error("laplacian_fd: stencil leaves the disk");
    const cplx c = z.value();
    auto stencil = [&](double step) {
        const cplx sum = field(DiskPoint{c + step}) + field(DiskPoint{c - step}) +
                         field(DiskPoint{c + cplx{0.0, step}}) + field(DiskPoint{c - cplx{0.0, step}});
        return (sum - 4.0 * field(z)) / (step * step);
    };
    if (!richardson) return stencil(h);
    return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
}

cplx laplacian_berezin_at_zero(const TruncatedOperator& s) {
    if (s.dim() < 2) throw std::invalid_argument("laplacian_berezin_at_zero needs dim >= 2");
    return 8.0 * (s.entry(1, 1) - s.entry(0, 0));
}

cplx laplacian_berezin_at_zero(const MonomialSymbol& u) {
    cplx sum{0.0};
    for (const auto& [e, c] : u.terms())
        sum += c * (2.0 * monomial_moment(e.j + 1, e.k + 1) - monomial_moment(e.j, e.k));
    return 8.0 * sum;
}

cplx invariant_laplacian(const std::function<cplx(DiskPoint)>& field, DiskPoint z, double h0,
                         bool richardson) {
    const double g = z.gap();
    return g * g * laplacian_fd(field, z, h0, richardson);
}

cplx invariant_laplacian_moment(const MonomialSymbol& u, DiskPoint z, const DiskQuadrature& rule) {
    return 8.0 * integrate(rule, [&](DiskPoint w) {
        return sym_compose_mobius_eval(u, z, w) * (2.0 * w.norm() - 1.0);
    });
}

cplx factored_invariant_laplacian(const std::vector<MonomialSymbol>& harmonic_factors, DiskPoint z) {
    MonomialSymbol product{cplx{1.0}};
    for (const auto& f : harmonic_factors) {
        if (!is_harmonic(f)) throw std::invalid_argument("factored form needs harmonic factors");
        product = product * f;
    }
    const double g = z.gap();
    return g * g * sym_evaluate(sym_laplacian(product), z);
}

cplx mean_value_transform(const MonomialSymbol& u, DiskPoint z, const DiskQuadrature& rule) {
    return integrate(rule, composed_evaluator(u, z));
}

double localization_norm(const MonomialSymbol& u, DiskPoint z, double tol) {
    const cplx uz = sym_evaluate(u, z);
    const cplx abs2 = berezin_symbol_series(u * sym_conjugate(u), z, tol);
    const cplx ut = berezin_symbol_series(u, z, tol);
    const double sq = abs2.real() - 2.0 * (std::conj(uz) * ut).real() + std::norm(uz);
    return std::sqrt(std::max(sq, 0.0));
}

std::vector<double> default_schedule(int k_max) {
    if (k_max < 1) throw std::invalid_argument("schedule needs k_max >= 1");
    std::vector<double> r;
    for (int k = 1; k <= k_max; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
    return r;
}

cplx path_point(const PathSpec& path, double r) {
    return std::polar(1.0, path.theta) * (1.0 - (1.0 - r) * std::polar(1.0, path.aperture));
}

DecayProfile decay_profile(const ScalarField& field, const PathSpec& path,
                           const std::vector<double>& schedule) {
    check_schedule(schedule);
    if (!(std::abs(path.aperture) < 0.5 * std::numbers::pi))
        throw std::invalid_argument("nontangential aperture must satisfy |aperture| < pi/2");
    DecayProfile profile{field.label, path, {}};
    double last_modulus = -1.0;
    for (double t : schedule) {
        const cplx zc = path_point(path, t);
        if (!(std::abs(zc) > last_modulus))
            throw std::invalid_argument("path points must move strictly toward the boundary");
        last_modulus = std::abs(zc);
        const DiskPoint z{zc};
        ProfileSample sample{t, zc, cplx{0.0}, "ok"};
        try {
            sample.value = field.eval(z);
            if (field.reliable && !field.reliable(z)) sample.flag = "unreliable";
        } catch (const std::exception& ex) {
            sample.flag = std::string("error: ") + ex.what();
        }
        profile.samples.push_back(std::move(sample));
    }
    return profile;
}

CompactnessReport commutator_compactness_indicator(const AnalyticSymbol& f, const AnalyticSymbol& g,
                                                   const std::vector<double>& schedule,
                                                   const BerezinConfig& config,
                                                   const PathSpec& path) {
    config.validate();
    for (const auto* in : {&f, &g})
        if (const auto* s = std::get_if<MonomialSymbol>(in); s && !is_analytic(*s))
            throw std::invalid_argument("commutator study needs analytic symbols");

    const int n = config.trunc;
    CompactnessReport report;
    report.trunc = n;
    report.threshold = config.threshold;
    report.reliable_radius = reliable_radius(n, config.tol);

    ScalarField deriv{[&](DiskPoint z) {
                          const double gap = z.gap();
                          return cplx{gap * gap * std::abs(derivative_of(f, z) * derivative_of(g, z))};
                      },
                      "(1-|z|^2)^2 |f'(z) g'(z)|", {}};
    report.derivative_profile = decay_profile(deriv, path, schedule);

    const int rows = std::max(inner_rows_for(f, n), inner_rows_for(g, n));
    report.inner_rows = rows;
    const TruncatedOperator comm = analytic_commutator(taylor_of(f, rows), taylor_of(g, rows), n, rows);
    ScalarField op{[&](DiskPoint z) { return cplx{std::abs(berezin_operator(comm, z))}; },
                   "|(T_conj(f) T_g - T_g T_conj(f))~(z)|",
                   [&](DiskPoint z) { return within_reliable_radius(n, z, config.tol); }};
    report.operator_profile = decay_profile(op, path, schedule);

    const auto* fs = std::get_if<MonomialSymbol>(&f);
    const auto* gs = std::get_if<MonomialSymbol>(&g);
    for (auto& s : report.operator_profile.samples) {
        if (s.flag != "unreliable") continue;
        if (fs && gs) {
            // exact symbol route: (conj(f) g)~(z) - conj(f(z)) g(z)
            const DiskPoint z{s.z};
            const cplx ft = berezin_symbol_series(sym_conjugate(*fs) * *gs, z, 1e-14);
            s.value = std::abs(ft - std::conj(sym_evaluate(*fs, z)) * sym_evaluate(*gs, z));
            s.flag = "symbol-route";
        } else {
            report.unreliable_samples = true;
        }
    }

    std::vector<DiskPoint> zeros;
    for (const auto* in : {&f, &g})
        if (const auto* b = std::get_if<BlaschkeProduct>(in))
            for (const auto& a : b->zeros())
                if (std::find(zeros.begin(), zeros.end(), a) == zeros.end()) zeros.push_back(a);
    std::sort(zeros.begin(), zeros.end(), [](DiskPoint a, DiskPoint b) { return a.abs() < b.abs(); });
    for (const auto& a : zeros) {
        const double gap = a.gap();
        report.zero_samples.push_back(
            {a.value(), gap * gap * std::abs(derivative_of(f, a) * derivative_of(g, a))});
    }
    if (!report.zero_samples.empty()) {
        auto [lo, hi] = std::minmax_element(report.zero_samples.begin(), report.zero_samples.end(),
                                            [](const auto& x, const auto& y) { return x.value < y.value; });
        report.zero_floor = lo->value;
        report.zero_max = hi->value;
    }

    const auto& last_deriv = report.derivative_profile.samples.back();
    const auto& last_op = report.operator_profile.samples.back();
    const bool outer_zero_high =
        !report.zero_samples.empty() && report.zero_samples.back().value >= config.threshold;
    if (std::abs(last_deriv.value) >= config.threshold || outer_zero_high) {
        report.verdict = "non-decaying";
    } else if (last_op.flag != "ok" && last_op.flag != "symbol-route") {
        report.verdict = "inconclusive";
    } else {
        report.verdict = std::abs(last_op.value) < config.threshold ? "decay-consistent" : "non-decaying";
    }
    return report;
}

CovarianceResiduals covariance_field_check(const TruncatedOperator& s, DiskPoint z, DiskPoint w,
                                           const BerezinConfig& config) {
    const int n = s.dim();
    const DiskPoint pz = mobius_eval(z, w);
    const bool reliable =
        within_reliable_radius(n, pz, config.tol) && within_reliable_radius(n, w, config.tol);

    const int out_dim = uz_working_rows(z, n);
    const TruncatedOperator conj_s = conjugate_by_uz(s, z, out_dim);
    const double value_residual = std::abs(berezin_operator(s, pz) - berezin_operator(conj_s, w));

    auto transform = [&](DiskPoint p) { return berezin_operator(s, p); };
    auto composed = [&](DiskPoint p) { return berezin_operator(s, mobius_eval(z, p)); };
    const double gw = w.gap();
    const double gp = mobius_gap(z, w);
    const cplx lhs = laplacian_fd(composed, w, config.fd_step, config.richardson) * gw * gw;
    const cplx rhs = gp * gp * laplacian_fd(transform, pz, config.fd_step, config.richardson);
    return {value_residual, std::abs(lhs - rhs), reliable};
}

Matrix fit_operator_from_berezin(const std::vector<DiskPoint>& points,
                                 const std::vector<cplx>& values, int dim) {
    if (points.size() != values.size())
        throw std::invalid_argument("fit_operator_from_berezin: points and values differ in length");
    if (dim < 1) throw std::invalid_argument("fit_operator_from_berezin needs dim >= 1");
    const auto unknowns = static_cast<Eigen::Index>(dim) * dim;
    if (static_cast<Eigen::Index>(points.size()) < unknowns)
        throw std::invalid_argument("fit_operator_from_berezin: too few samples");

    Matrix design(static_cast<Eigen::Index>(points.size()), unknowns);
    Vector rhs(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        const cplx z = points[i].value();
        const double g = points[i].gap();
        rhs(row) = values[i] / (g * g);
        cplx zbj{1.0};
        for (int j = 0; j < dim; ++j) {
            cplx zn{1.0};
            for (int k = 0; k < dim; ++k) {
                design(row, j * dim + k) = zbj * zn;
                zn *= z;
            }
            zbj *= std::conj(z);
        }
    }
    const Vector coeffs = design.colPivHouseholderQr().solve(rhs);
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            m(k, j) = coeffs(j * dim + k) / std::sqrt((j + 1.0) * (k + 1.0));
    return m;
}

}  // namespace bergman
