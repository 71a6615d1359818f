#include "bergman/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

// Relative level below which a coefficient counts as a rounding residue.
constexpr double kCoeffRelTol = 1e-12;

cplx ipow(cplx x, int n) {
    cplx r{1.0};
    for (; n > 0; n >>= 1) {
        if (n & 1) r *= x;
        x *= x;
    }
    return r;
}

}  // namespace

MonomialSymbol::MonomialSymbol(cplx constant) { add(0, 0, constant); }

MonomialSymbol::MonomialSymbol(std::initializer_list<std::pair<const Exponent, cplx>> terms) {
    for (const auto& [e, c] : terms) add(e.j, e.k, c);
}

MonomialSymbol MonomialSymbol::monomial(int j, int k, cplx c) {
    MonomialSymbol s;
    s.add(j, k, c);
    return s;
}

cplx MonomialSymbol::coeff(int j, int k) const {
    auto it = terms_.find({j, k});
    return it == terms_.end() ? cplx{0.0} : it->second;
}

int MonomialSymbol::deg_z() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j);
    return d;
}

int MonomialSymbol::deg_zbar() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.k);
    return d;
}

void MonomialSymbol::add(int j, int k, cplx c) {
    if (j < 0 || k < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    if (c == cplx{0.0}) return;
    auto [it, inserted] = terms_.try_emplace(Exponent{j, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx{0.0}) terms_.erase(it);
    }
}

MonomialSymbol& MonomialSymbol::operator+=(const MonomialSymbol& other) {
    for (const auto& [e, c] : other.terms_) add(e.j, e.k, c);
    return *this;
}

MonomialSymbol& MonomialSymbol::operator*=(cplx s) {
    if (s == cplx{0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MonomialSymbol operator-(const MonomialSymbol& a, const MonomialSymbol& b) {
    MonomialSymbol r = a;
    for (const auto& [e, c] : b.terms()) r.add(e.j, e.k, -c);
    return r;
}

MonomialSymbol operator*(const MonomialSymbol& a, const MonomialSymbol& b) {
    return sym_multiply(a, b);
}

MonomialSymbol sym_multiply(const MonomialSymbol& a, const MonomialSymbol& b) {
    MonomialSymbol r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add(ea.j + eb.j, ea.k + eb.k, ca * cb);
    return r;
}

MonomialSymbol sym_conjugate(const MonomialSymbol& a) {
    MonomialSymbol r;
    for (const auto& [e, c] : a.terms()) r.add(e.k, e.j, std::conj(c));
    return r;
}

MonomialSymbol wirtinger_dz(const MonomialSymbol& a) {
    MonomialSymbol r;
    for (const auto& [e, c] : a.terms())
        if (e.j > 0) r.add(e.j - 1, e.k, static_cast<double>(e.j) * c);
    return r;
}

MonomialSymbol wirtinger_dzbar(const MonomialSymbol& a) {
    MonomialSymbol r;
    for (const auto& [e, c] : a.terms())
        if (e.k > 0) r.add(e.j, e.k - 1, static_cast<double>(e.k) * c);
    return r;
}

MonomialSymbol sym_laplacian(const MonomialSymbol& a) {
    MonomialSymbol r;
    for (const auto& [e, c] : a.terms())
        if (e.j > 0 && e.k > 0) r.add(e.j - 1, e.k - 1, 4.0 * e.j * e.k * c);
    return r;
}

bool is_harmonic(const MonomialSymbol& a) {
    return std::none_of(a.terms().begin(), a.terms().end(),
                        [](const auto& t) { return t.first.j > 0 && t.first.k > 0; });
}

bool is_analytic(const MonomialSymbol& a) { return a.deg_zbar() <= 0; }

bool is_coanalytic(const MonomialSymbol& a) { return a.deg_z() <= 0; }

cplx sym_evaluate(const MonomialSymbol& a, cplx w) {
    const cplx wb = std::conj(w);
    cplx sum{0.0};
    for (const auto& [e, c] : a.terms()) sum += c * ipow(w, e.j) * ipow(wb, e.k);
    return sum;
}

cplx sym_evaluate(const MonomialSymbol& a, DiskPoint w) { return sym_evaluate(a, w.value()); }

cplx sym_compose_mobius_eval(const MonomialSymbol& a, DiskPoint z, DiskPoint w) {
    return sym_evaluate(a, mobius_eval(z, w));
}

Evaluator evaluator(MonomialSymbol a) {
    return [a = std::move(a)](DiskPoint w) { return sym_evaluate(a, w); };
}

Evaluator composed_evaluator(MonomialSymbol a, DiskPoint z) {
    return [a = std::move(a), z](DiskPoint w) { return sym_compose_mobius_eval(a, z, w); };
}

double coeff_l1(const MonomialSymbol& a) {
    double s = 0.0;
    for (const auto& [e, c] : a.terms()) s += std::abs(c);
    return s;
}

double max_coeff_diff(const MonomialSymbol& a, const MonomialSymbol& b) {
    double m = 0.0;
    const MonomialSymbol diff = a - b;
    for (const auto& [e, c] : diff.terms()) m = std::max(m, std::abs(c));
    return m;
}

bool is_negligible(const MonomialSymbol& a, double scale) {
    const double limit = kCoeffRelTol * std::max(scale, 1.0);
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [&](const auto& t) { return std::abs(t.second) <= limit; });
}

std::string to_string(ProductClass kind) {
    switch (kind) {
        case ProductClass::NotHarmonic: return "not-harmonic";
        case ProductClass::BothAnalytic: return "both-analytic";
        case ProductClass::BothCoanalytic: return "both-conjugate-analytic";
        case ProductClass::Linked: return "linked";
    }
    return "unknown";
}

bool linked_conditions_hold(const MonomialSymbol& u, const MonomialSymbol& v, cplx alpha,
                            cplx beta) {
    const double scale =
        (std::abs(alpha) + std::abs(beta)) * std::max(coeff_l1(u), coeff_l1(v)) *
        std::max(1, std::max({u.deg_z(), u.deg_zbar(), v.deg_z(), v.deg_zbar()}));
    const MonomialSymbol bar = alpha * wirtinger_dzbar(u) + beta * wirtinger_dzbar(v);
    const MonomialSymbol hol = alpha * wirtinger_dz(u) - beta * wirtinger_dz(v);
    return is_negligible(bar, scale) && is_negligible(hol, scale);
}

HarmonicProductClassification classify_harmonic_product(const MonomialSymbol& u,
                                                        const MonomialSymbol& v) {
    if (!is_harmonic(u) || !is_harmonic(v))
        throw std::invalid_argument("classify_harmonic_product needs harmonic symbols");

    const int deg = std::max({1, u.deg_z(), u.deg_zbar(), v.deg_z(), v.deg_zbar()});
    const double scale = 4.0 * deg * deg * coeff_l1(u) * coeff_l1(v);
    if (!is_negligible(sym_laplacian(u * v), scale)) return {};

    if (is_analytic(u) && is_analytic(v)) return {ProductClass::BothAnalytic};
    if (is_coanalytic(u) && is_coanalytic(v)) return {ProductClass::BothCoanalytic};

    // Every coefficient gives one row of  alpha*x + beta*y = 0.
    std::vector<std::pair<cplx, cplx>> rows;
    const MonomialSymbol ub = wirtinger_dzbar(u), vb = wirtinger_dzbar(v);
    const MonomialSymbol uh = wirtinger_dz(u), vh = wirtinger_dz(v);
    auto add_rows = [&rows](const MonomialSymbol& x, const MonomialSymbol& y, double sign) {
        std::map<Exponent, std::pair<cplx, cplx>> merged;
        for (const auto& [e, c] : x.terms()) merged[e].first = c;
        for (const auto& [e, c] : y.terms()) merged[e].second = sign * c;
        for (const auto& [e, row] : merged) rows.push_back(row);
    };
    add_rows(ub, vb, 1.0);
    add_rows(uh, vh, -1.0);

    auto pivot = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::abs(a.first) + std::abs(a.second) < std::abs(b.first) + std::abs(b.second);
    });
    cplx alpha{1.0}, beta{0.0};
    if (pivot != rows.end()) {
        alpha = pivot->second;
        beta = -pivot->first;
    }
    if (std::abs(beta) > 0.0) {
        alpha /= beta;
        beta = 1.0;
    } else {
        beta = 0.0;
        alpha = 1.0;
    }
    if (!linked_conditions_hold(u, v, alpha, beta))
        throw std::logic_error("harmonic product without a linking pair (alpha, beta)");
    return {ProductClass::Linked, alpha, beta};
}

cplx blaschke_eval(const BlaschkeProduct& b, DiskPoint w) {
    cplx p{1.0};
    for (const auto& a : b.zeros()) {
        const cplx av = a.value();
        p *= (av - w.value()) / (1.0 - std::conj(av) * w.value());
    }
    return p;
}

cplx blaschke_deriv(const BlaschkeProduct& b, DiskPoint w) {
    const auto& zs = b.zeros();
    const std::size_t n = zs.size();
    std::vector<cplx> factor(n), dfactor(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx a = zs[i].value();
        const cplx d = 1.0 - std::conj(a) * w.value();
        factor[i] = (a - w.value()) / d;
        dfactor[i] = (std::norm(a) - 1.0) / (d * d);
    }
    // prefix/suffix products keep the product rule free of divisions by b(w)
    std::vector<cplx> suffix(n + 1, cplx{1.0});
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * factor[i];
    cplx prefix{1.0}, sum{0.0};
    for (std::size_t i = 0; i < n; ++i) {
        sum += prefix * dfactor[i] * suffix[i + 1];
        prefix *= factor[i];
    }
    return sum;
}

std::vector<cplx> blaschke_taylor(const BlaschkeProduct& b, int n) {
    if (n < 1) throw std::invalid_argument("blaschke_taylor needs n >= 1");
    std::vector<cplx> acc(static_cast<std::size_t>(n), cplx{0.0});
    acc[0] = 1.0;
    for (const auto& zero : b.zeros()) {
        const cplx a = zero.value(), ab = std::conj(a);
        // factor series: a + sum_{m>=1} (a ab^m - ab^{m-1}) w^m
        std::vector<cplx> f(acc.size());
        f[0] = a;
        cplx pw{1.0};
        for (std::size_t m = 1; m < f.size(); ++m) {
            f[m] = a * pw * ab - pw;
            pw *= ab;
        }
        std::vector<cplx> next(acc.size(), cplx{0.0});
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == cplx{0.0}) continue;
            for (std::size_t m = 0; i + m < acc.size(); ++m) next[i + m] += acc[i] * f[m];
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace bergman
