#include "bergman/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "bergman/sampling.hpp"

namespace bergman {

namespace {

using namespace bergman::sampling;

class Recorder {
public:
    explicit Recorder(BatteryResult& out) : out_(out) {}

    void at_most(std::string metric, double value, double tol) {
        const bool ok = std::isfinite(value) && value <= tol;
        out_.checks.push_back({std::move(metric), value, tol, ok});
        out_.passed = out_.passed && ok;
    }
    void at_least(std::string metric, double value, double floor) {
        const bool ok = std::isfinite(value) && value >= floor;
        out_.checks.push_back({std::move(metric), value, floor, ok});
        out_.passed = out_.passed && ok;
    }
    /// Asserts that a count of violations is zero.
    void none(std::string metric, int violations) { at_most(std::move(metric), violations, 0.0); }
    void observe(std::string metric, double value) {
        out_.checks.push_back({std::move(metric), value, std::nullopt, true});
    }

private:
    BatteryResult& out_;
};

double block_diff(const Matrix& a, const Matrix& b, int k) {
    return (a.topLeftCorner(k, k) - b.topLeftCorner(k, k)).cwiseAbs().maxCoeff();
}

DiskQuadrature rule_of(const SuiteOptions& o) {
    return build_rule(o.config.n_radial, o.config.n_angular);
}

TruncatedOperator random_unit_operator(std::mt19937_64& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_coeff(rng);
    return TruncatedOperator(m / m.norm());
}

const MonomialSymbol kW = MonomialSymbol::monomial(1, 0);
const MonomialSymbol kWbar = MonomialSymbol::monomial(0, 1);
const MonomialSymbol kAbs2 = MonomialSymbol::monomial(1, 1);

void quadrature_moments(const SuiteOptions& o, Recorder& rec) {
    constexpr int kMax = 40;
    const DiskQuadrature rule = build_rule();
    Matrix sums = Matrix::Zero(kMax + 1, kMax + 1);
    std::vector<cplx> pw(kMax + 1), pc(kMax + 1);
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const cplx w = rule.nodes()[i];
        pw[0] = pc[0] = 1.0;
        for (int a = 1; a <= kMax; ++a) {
            pw[a] = pw[a - 1] * w;
            pc[a] = pc[a - 1] * std::conj(w);
        }
        const double wt = rule.weights()[i];
        for (int a = 0; a <= kMax; ++a)
            for (int b = 0; b <= kMax; ++b) sums(a, b) += wt * pw[a] * pc[b];
    }
    double worst = 0.0;
    for (int a = 0; a <= kMax; ++a)
        for (int b = 0; b <= kMax; ++b)
            worst = std::max(worst, std::abs(sums(a, b) - monomial_moment(a, b)));
    rec.at_most("max |rule - exact moment|, a,b <= 40, default rule", worst, 1e-13);
    rec.observe("analytic residual of the configured rule, degree 40",
                moment_residual(rule_of(o), kMax));
}

void harmonic_fixed_point(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const auto rule = rule_of(o);
    const auto grid = disk_grid(9, 11, 0.9);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto u = random_harmonic(rng, 1 + i % 6);
        const auto f = evaluator(u);
        for (const auto& z : grid)
            worst = std::max(worst, std::abs(berezin_symbol_quadrature(f, z, rule) - sym_evaluate(u, z)));
    }
    rec.at_most("max |u~(z) - u(z)|, 20 harmonic symbols, 100 points |z| <= 0.9", worst, 1e-8);
}

void route_agreement(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const auto rule = rule_of(o);
    double sq = 0.0, so = 0.0, qo = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto u = random_symbol(rng, 6, 6);
        const auto t = toeplitz_exact(u, o.n);
        const auto f = evaluator(u);
        for (const auto& z : random_points(rng, 10, 0.7)) {
            const cplx s = berezin_symbol_series(u, z);
            const cplx q = berezin_symbol_quadrature(f, z, rule);
            const cplx op = berezin_operator(t, z);
            sq = std::max(sq, std::abs(s - q));
            so = std::max(so, std::abs(s - op));
            qo = std::max(qo, std::abs(q - op));
        }
    }
    rec.at_most("series vs quadrature, |z| <= 0.7", sq, 1e-6);
    rec.at_most("series vs operator, |z| <= 0.7", so, 1e-6);
    rec.at_most("quadrature vs operator, |z| <= 0.7", qo, 1e-6);
}

void laplacian_at_zero(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto s = random_unit_operator(rng, o.n);
        auto field = [&](DiskPoint z) { return berezin_operator(s, z); };
        const cplx fd = laplacian_fd(field, 0.0, o.config.fd_step, o.config.richardson);
        worst = std::max(worst, std::abs(laplacian_berezin_at_zero(s) - fd));
    }
    rec.at_most("closed form vs finite differences, 20 unit-norm matrices", worst, 1e-5);
    const auto t = toeplitz_exact(kAbs2, o.n);
    auto field = [&](DiskPoint z) { return berezin_operator(t, z); };
    rec.at_most("closed form for T_{|w|^2} vs 4/3", std::abs(laplacian_berezin_at_zero(t) - 4.0 / 3.0), 1e-6);
    rec.at_most("finite differences for T_{|w|^2} vs 4/3",
                std::abs(laplacian_fd(field, 0.0, o.config.fd_step, o.config.richardson) - 4.0 / 3.0), 1e-6);
}

void laplacian_symbol_route(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto u = random_symbol(rng, 6, 6);
        worst = std::max(worst, std::abs(laplacian_berezin_at_zero(u) -
                                         laplacian_berezin_at_zero(toeplitz_exact(u, o.n))));
    }
    rec.at_most("moment route vs matrix route at 0, 20 symbols", worst, 1e-10);
}

void covariance(const SuiteOptions& o, Recorder& rec) {
    const auto rule = rule_of(o);
    const std::vector<DiskPoint> zs{cplx{0.5, 0.0}, cplx{0.0, 0.5}, cplx{-0.3, 0.4}, cplx{0.25, -0.1}};
    const int half = o.n / 2;
    constexpr int kFixed = 16;
    double over = 0.0, compressed = 0.0, first_fixed = 0.0, final_fixed = 0.0;
    int violations = 0;
    for (const auto& u : {kW, kWbar, kAbs2}) {
        for (const auto& z : zs) {
            const auto composed = composed_evaluator(u, z);
            const auto ref = toeplitz_quadrature(composed, std::max(half, kFixed), rule).op.matrix();
            over = std::max(over, block_diff(covariant_toeplitz(u, z, o.n).matrix(), ref, half));
            compressed = std::max(compressed, block_diff(covariant_toeplitz(u, z, o.n, CovarianceRoute::Compressed).matrix(),
                                                         ref, std::min(8, o.n)));
            double prev = 0.0;
            for (int n : {32, 64, 128}) {
                const double r = block_diff(
                    covariant_toeplitz(u, z, n, CovarianceRoute::Compressed).matrix(), ref, kFixed);
                if (n > 32 && r > std::max(prev, 1e-12)) ++violations;
                if (n == 32) first_fixed = std::max(first_fixed, r);
                prev = r;
            }
            final_fixed = std::max(final_fixed, prev);
        }
    }
    rec.at_most("oversampled U_z T_u U_z vs T_{u o phi_z}, leading N/2 block, |z| <= 0.5", over, 1e-6);
    rec.none("monotonicity violations, plain compression, leading 16 block, N = 32, 64, 128", violations);
    rec.observe("plain compression residual, leading 16 block, N = 32", first_fixed);
    rec.observe("plain compression residual, leading 16 block, N = 128", final_fixed);
    rec.observe("plain compression residual, leading 8 block, N = trunc", compressed);
}

void product_transform(const SuiteOptions& o, Recorder& rec) {
    const std::vector<MonomialSymbol> alphabet{kW, kWbar, kAbs2};
    const std::vector<DiskPoint> zs{cplx{0.0}, cplx{0.5, 0.0}, cplx{-0.3, 0.4}, cplx{0.0, 0.25}};
    std::vector<std::vector<MonomialSymbol>> words{{}};
    double worst = 0.0;
    int count = 0;
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<MonomialSymbol>> next;
        for (const auto& w : words)
            for (const auto& a : alphabet) {
                next.push_back(w);
                next.back().push_back(a);
            }
        words = std::move(next);
        for (const auto& w : words)
            for (const auto& z : zs) {
                worst = std::max(worst, berezin_of_product(w, z, o.n).residual);
                ++count;
            }
    }
    rec.at_most("product transform vs covariant chain on e_0, words of length <= 3", worst, 1e-6);
    rec.observe("products checked", count);
}

void semicommutator(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto u = random_harmonic(rng, 4);
        const auto v = random_harmonic(rng, 4);
        const auto defect = semicommutator_defect(u, v, o.n);
        const auto uv = u * v;
        for (const auto& z : random_points(rng, 10, 0.7)) {
            const cplx lhs = berezin_symbol_series(uv, z) - sym_evaluate(u, z) * sym_evaluate(v, z);
            worst = std::max(worst, std::abs(lhs - berezin_operator(defect, z)));
        }
    }
    rec.at_most("|(uv)~ - uv - (2T_uv - T_uT_v - T_vT_u)~|, 10 harmonic pairs, |z| <= 0.7", worst, 1e-6);
}

void harmonic_product_classifier(const SuiteOptions&, Recorder& rec) {
    const MonomialSymbol one{1.0};
    const cplx i{0.0, 1.0};
    auto w = [](int d, cplx c = 1.0) { return MonomialSymbol::monomial(d, 0, c); };
    auto wb = [](int d, cplx c = 1.0) { return MonomialSymbol::monomial(0, d, c); };
    struct Case {
        MonomialSymbol u, v;
        ProductClass expected;
    };
    const std::vector<Case> corpus{
        {w(1), w(1), ProductClass::BothAnalytic},
        {w(2) + one, w(1, 3.0) - w(3, i), ProductClass::BothAnalytic},
        {one, one, ProductClass::BothAnalytic},
        {wb(1), wb(2), ProductClass::BothCoanalytic},
        {wb(1, 2.0) + one, wb(3, i), ProductClass::BothCoanalytic},
        {w(1) + wb(1), w(1, i) - wb(1, i), ProductClass::Linked},
        {w(1) + wb(1), w(1) - wb(1), ProductClass::Linked},
        {w(2) + wb(1, 2.0), w(2, 3.0) - wb(1, 6.0), ProductClass::Linked},
        {w(3) + one + wb(1, i), w(3) - wb(1, i), ProductClass::Linked},
        {w(1), wb(1), ProductClass::NotHarmonic},
        {w(1) + wb(1), w(1) + wb(1), ProductClass::NotHarmonic},
        {w(2), wb(1) + w(1), ProductClass::NotHarmonic},
    };
    int mismatches = 0, laplacian_disagreements = 0, bad_pairs = 0;
    for (const auto& c : corpus) {
        const auto got = classify_harmonic_product(c.u, c.v);
        if (got.kind != c.expected) ++mismatches;
        const bool harmonic = sym_laplacian(c.u * c.v).empty();
        if (harmonic == (got.kind == ProductClass::NotHarmonic)) ++laplacian_disagreements;
        if (got.kind == ProductClass::Linked && !linked_conditions_hold(c.u, c.v, got.alpha, got.beta))
            ++bad_pairs;
    }
    const auto linked = classify_harmonic_product(corpus[5].u, corpus[5].v);
    rec.none("class differs from the expected class (12 pairs)", mismatches);
    rec.none("class disagrees with exact Laplacian of uv", laplacian_disagreements);
    rec.none("linked pairs whose (alpha, beta) fail the linear conditions", bad_pairs);
    rec.at_most("|(alpha, beta) - (i, 1)| for u = w + conj(w), v = iw - i conj(w)",
                std::abs(linked.alpha - i) + std::abs(linked.beta - 1.0), 1e-14);
}

void boundary_decay(const SuiteOptions& o, Recorder& rec) {
    BerezinConfig cfg = o.config;
    cfg.trunc = 4 * o.n;
    const auto w = kW;
    const auto rep = commutator_compactness_indicator(w, w, default_schedule(10), cfg);
    rec.at_most("(1-r^2)^2 |f'g'| at r = 1 - 2^-10, f = g = w",
                std::abs(rep.derivative_profile.samples.back().value), 1e-5);
    int reliable = 0, violations = 0;
    double prev = INFINITY;
    for (const auto& s : rep.operator_profile.samples) {
        if (s.flag != "ok") break;
        ++reliable;
        if (!(std::abs(s.value) < prev)) ++violations;
        prev = std::abs(s.value);
    }
    rec.observe("operator truncation for the commutator profile", cfg.trunc);
    rec.at_least("reliable prefix length of the commutator profile", reliable, 2);
    rec.none("increases of |[T_conj(w), T_w]~| along the reliable prefix", violations);
    rec.none("verdict for f = g = w is not decay-consistent", rep.verdict == "decay-consistent" ? 0 : 1);

    std::vector<DiskPoint> zeros;
    for (int k = 1; k <= 8; ++k) zeros.emplace_back(1.0 - std::ldexp(1.0, -k));
    const BlaschkeProduct b{zeros};
    const auto brep = commutator_compactness_indicator(b, b, default_schedule(8), cfg);
    rec.at_least("Blaschke floor of (1-|a|^2)^2 |b'(a)|^2 over zeros 1 - 2^-k, k <= 8",
                 brep.zero_floor.value_or(0.0), 1e-300);
    rec.observe("Blaschke maximum over zeros", brep.zero_max.value_or(0.0));
    rec.observe("Blaschke value at the outermost zero", brep.zero_samples.back().value);
}

void uz_unitarity(const SuiteOptions& o, Recorder& rec) {
    const std::vector<DiskPoint> zs{cplx{0.7, 0.0}, cplx{0.0, 0.7}, cplx{-0.42, 0.56}, cplx{0.3, 0.3}};
    double gram = 0.0, kernel = 0.0;
    for (const auto& z : zs) {
        const int rows = uz_working_rows(z, o.n);
        const Matrix block = unitary_uz_block(z, rows, o.n);
        const Matrix g = block.adjoint() * block;
        gram = std::max(gram, block_diff(g, Matrix::Identity(o.n, o.n), o.n / 2));
        for (int j = 0; j < o.n; ++j)
            kernel = std::max(kernel, std::abs(block(j, 0) + z.gap() * std::sqrt(j + 1.0) *
                                                                 std::pow(std::conj(z.value()), j)));
    }
    rec.at_most("columns orthonormal, leading N/2, |z| <= 0.7", gram, 1e-8);
    rec.at_most("U_z 1 = -k_z", kernel, 1e-12);
}

void covariance_field(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const std::vector<std::pair<DiskPoint, DiskPoint>> pairs{
        {cplx{0.0}, cplx{0.3, 0.0}}, {cplx{0.3}, cplx{0.3}}, {cplx{-0.2, 0.2}, cplx{0.1, -0.3}}};
    const auto t = toeplitz_exact(kAbs2, o.n);
    const auto s = random_unit_operator(rng, o.n);
    double value = 0.0, lap = 0.0;
    for (const auto& op : {t, s})
        for (const auto& [z, w] : pairs) {
            const auto r = covariance_field_check(op, z, w, o.config);
            value = std::max(value, r.value_residual);
            lap = std::max(lap, r.laplacian_residual);
        }
    rec.at_most("|S~(phi_z(w)) - (U_z S U_z)~(w)|", value, 1e-5);
    rec.at_most("invariant Laplacian covariance residual", lap, 1e-5);
}

void mean_value(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const auto rule = rule_of(o);
    double worst = 0.0, harmonic = 0.0;
    for (int i = 0; i < 8; ++i) {
        const auto u = random_symbol(rng, 4, 4);
        const auto h = random_harmonic(rng, 4);
        for (const auto& z : random_points(rng, 5, 0.7)) {
            worst = std::max(worst, std::abs(mean_value_transform(u, z, rule) - berezin_symbol_series(u, z)));
            harmonic = std::max(harmonic, std::abs(mean_value_transform(h, z, rule) - sym_evaluate(h, z)));
        }
    }
    rec.at_most("integral of u o phi_z vs u~(z)", worst, 1e-8);
    rec.at_most("integral of h o phi_z vs h(z), h harmonic", harmonic, 1e-8);
}

void invariant_laplacian_identity(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const auto rule = rule_of(o);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        const auto u = random_symbol(rng, 4, 4);
        auto field = [&](DiskPoint p) { return berezin_symbol_series(u, p); };
        for (const auto& z : random_points(rng, 4, 0.6)) {
            const cplx moment = invariant_laplacian_moment(u, z, rule);
            const cplx fd = invariant_laplacian(field, z, o.config.fd_step, o.config.richardson);
            worst = std::max(worst, std::abs(moment - fd) / coeff_l1(u));
        }
    }
    rec.at_most("8 int (u o phi_z)(2|w|^2-1) vs (1-|z|^2)^2 (Delta u~)(z), relative", worst, 1e-5);
}

void localization(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const double a = localization_norm(kW, 0.5), b = localization_norm(kW, 0.9), c = localization_norm(kW, 0.99);
    rec.at_most("|norm at 0 for u = w - sqrt(1/2)|", std::abs(localization_norm(kW, 0.0) - std::sqrt(0.5)), 1e-12);
    rec.none("increases of ||(w - z) k_z|| at r = 0.5, 0.9, 0.99", (b < a ? 0 : 1) + (c < b ? 0 : 1));
    rec.observe("||(w - z) k_z|| at r = 0.99", c);
    double worst_negative = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto u = random_symbol(rng, 4, 4);
        for (const auto& z : random_points(rng, 5, 0.8)) {
            const auto uz = sym_evaluate(u, z);
            const double sq = (berezin_symbol_series(sym_conjugate(u) * u, z) -
                               2.0 * std::real(std::conj(uz) * berezin_symbol_series(u, z)) + std::norm(uz)).real();
            worst_negative = std::max(worst_negative, -sq);
        }
    }
    rec.at_most("most negative squared localization quantity", worst_negative, 1e-10);
}

void injectivity(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    constexpr int kDim = 16;
    const auto s = random_unit_operator(rng, kDim);
    std::vector<DiskPoint> pts;
    std::vector<cplx> vals;
    for (const auto& z : disk_grid(16, 40, 0.8)) {
        pts.push_back(z);
        vals.push_back(berezin_operator(s, z));
    }
    const Matrix fit = fit_operator_from_berezin(pts, vals, kDim);
    rec.at_most("leading 8x8 entries recovered from S~ samples", block_diff(fit, s.matrix(), 8), 1e-4);
}

void toeplitz_contractivity(const SuiteOptions& o, Recorder& rec) {
    std::mt19937_64 rng(o.seed);
    const auto rule = rule_of(o);
    double excess = -INFINITY, adjoint = 0.0;
    for (int i = 0; i < 8; ++i) {
        const auto u = random_symbol(rng, 5, 4);
        double sup = 0.0;
        for (const auto& w : rule.nodes()) sup = std::max(sup, std::abs(sym_evaluate(u, w)));
        const auto t = toeplitz_exact(u, o.n);
        excess = std::max(excess, op_norm_2(t) - sup);
        adjoint = std::max(adjoint, max_abs_diff(toeplitz_exact(sym_conjugate(u), o.n), op_adjoint(t)));
    }
    rec.at_most("||T_u|| - sup |u| over nodes", excess, 1e-6);
    rec.at_most("|T_conj(u) - T_u^*|", adjoint, 1e-13);
}

struct Battery {
    BatteryInfo info;
    std::function<void(const SuiteOptions&, Recorder&)> run;
};

const std::vector<Battery>& batteries() {
    static const std::vector<Battery> all{
        {{"quadrature-moments", "disk rule reproduces exact monomial moments"}, quadrature_moments},
        {{"harmonic-fixed-point", "harmonic symbols equal their Berezin transform"}, harmonic_fixed_point},
        {{"route-agreement", "series, quadrature and matrix Berezin routes agree"}, route_agreement},
        {{"laplacian-at-zero", "Laplacian of S~ at 0 from two matrix entries"}, laplacian_at_zero},
        {{"laplacian-symbol-route", "Laplacian of u~ at 0 from moments matches the matrix route"},
         laplacian_symbol_route},
        {{"covariance", "U_z T_u U_z equals T_{u o phi_z}"}, covariance},
        {{"product-transform", "transform of a Toeplitz product via the covariant chain"}, product_transform},
        {{"semicommutator", "(uv)~ - uv equals the transform of 2T_uv - T_uT_v - T_vT_u"}, semicommutator},
        {{"harmonic-product-classifier", "classification of harmonic products"}, harmonic_product_classifier},
        {{"boundary-decay", "boundary profiles of the analytic commutator indicator"}, boundary_decay},
        {{"uz-unitarity", "U_z columns are orthonormal and U_z 1 = -k_z"}, uz_unitarity},
        {{"covariance-field", "S~ o phi_z and its invariant Laplacian under U_z"}, covariance_field},
        {{"mean-value", "integral of u o phi_z equals u~(z)"}, mean_value},
        {{"invariant-laplacian", "moment form of the invariant Laplacian of u~"}, invariant_laplacian_identity},
        {{"localization", "||(u - u(z)) k_z|| behaviour"}, localization},
        {{"injectivity", "S recovered from samples of S~"}, injectivity},
        {{"toeplitz-contractivity", "Toeplitz compressions are contractive and respect adjoints"},
         toeplitz_contractivity},
    };
    return all;
}

}  // namespace

std::vector<BatteryInfo> identity_batteries() {
    std::vector<BatteryInfo> out;
    for (const auto& b : batteries()) out.push_back(b.info);
    return out;
}

BatteryResult run_battery(const std::string& name, const SuiteOptions& options) {
    options.config.validate();
    if (options.n < 8) throw std::invalid_argument("identity suite needs n >= 8");
    const auto it = std::find_if(batteries().begin(), batteries().end(),
                                 [&](const Battery& b) { return b.info.name == name; });
    if (it == batteries().end()) throw std::invalid_argument("unknown battery '" + name + "'");
    BatteryResult result{it->info.name, it->info.description, {}, true, 0.0};
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->run(options, rec);
    } catch (const std::exception& ex) {
        result.checks.push_back({std::string("exception: ") + ex.what(), NAN, 0.0, false});
        result.passed = false;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<BatteryResult> run_identity_suite(const SuiteOptions& options,
                                              const std::vector<std::string>& only) {
    for (const auto& name : only) {
        const auto known = identity_batteries();
        if (std::none_of(known.begin(), known.end(), [&](const BatteryInfo& b) { return b.name == name; }))
            throw std::invalid_argument("unknown battery '" + name + "'");
    }
    std::vector<BatteryResult> out;
    for (const auto& b : batteries()) {
        if (!only.empty() && std::find(only.begin(), only.end(), b.info.name) == only.end()) continue;
        out.push_back(run_battery(b.info.name, options));
    }
    return out;
}

}  // namespace bergman
