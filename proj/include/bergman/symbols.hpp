#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bergman/disk.hpp"

namespace bergman {

/// Pointwise evaluator of a function on the disk.
using Evaluator = std::function<cplx(DiskPoint)>;

/// Exponent pair (j, k) of the monomial w^j conj(w)^k.
struct Exponent {
    int j = 0;
    int k = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Finite sum  sum c_{j,k} w^j conj(w)^k.  Zero coefficients are never stored.
class MonomialSymbol {
public:
    using Terms = std::map<Exponent, cplx>;

    MonomialSymbol() = default;
    explicit MonomialSymbol(cplx constant);
    MonomialSymbol(std::initializer_list<std::pair<const Exponent, cplx>> terms);

    static MonomialSymbol monomial(int j, int k, cplx c = 1.0);
    /// The coordinate function w.
    static MonomialSymbol identity() { return monomial(1, 0); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] cplx coeff(int j, int k) const;
    /// max j; -1 for the zero symbol.
    [[nodiscard]] int deg_z() const;
    /// max k; -1 for the zero symbol.
    [[nodiscard]] int deg_zbar() const;

    /// Adds c to the (j, k) coefficient, dropping the entry if it becomes zero.
    void add(int j, int k, cplx c);

    MonomialSymbol& operator+=(const MonomialSymbol& other);
    MonomialSymbol& operator*=(cplx s);
    friend MonomialSymbol operator+(MonomialSymbol a, const MonomialSymbol& b) { return a += b; }
    friend MonomialSymbol operator-(const MonomialSymbol& a, const MonomialSymbol& b);
    friend MonomialSymbol operator*(MonomialSymbol a, cplx s) { return a *= s; }
    friend MonomialSymbol operator*(cplx s, MonomialSymbol a) { return a *= s; }
    friend MonomialSymbol operator*(const MonomialSymbol& a, const MonomialSymbol& b);
    friend bool operator==(const MonomialSymbol&, const MonomialSymbol&) = default;

private:
    Terms terms_;
};

MonomialSymbol sym_multiply(const MonomialSymbol& a, const MonomialSymbol& b);
MonomialSymbol sym_conjugate(const MonomialSymbol& a);
MonomialSymbol wirtinger_dz(const MonomialSymbol& a);
MonomialSymbol wirtinger_dzbar(const MonomialSymbol& a);
/// 4 d^2/dz dzbar
MonomialSymbol sym_laplacian(const MonomialSymbol& a);

/// No mixed terms w^j conj(w)^k with j, k >= 1.
bool is_harmonic(const MonomialSymbol& a);
bool is_analytic(const MonomialSymbol& a);
bool is_coanalytic(const MonomialSymbol& a);

cplx sym_evaluate(const MonomialSymbol& a, cplx w);
cplx sym_evaluate(const MonomialSymbol& a, DiskPoint w);
/// a(phi_z(w)). u o phi_z is rational, so it only exists pointwise.
cplx sym_compose_mobius_eval(const MonomialSymbol& a, DiskPoint z, DiskPoint w);

Evaluator evaluator(MonomialSymbol a);
Evaluator composed_evaluator(MonomialSymbol a, DiskPoint z);

/// Sum of coefficient moduli; bounds |a| on the closed disk.
double coeff_l1(const MonomialSymbol& a);
/// Largest coefficient modulus of a - b.
double max_coeff_diff(const MonomialSymbol& a, const MonomialSymbol& b);
/// Zero up to rounding relative to `scale`.
bool is_negligible(const MonomialSymbol& a, double scale);

/// How the product of two harmonic symbols behaves.
enum class ProductClass {
    NotHarmonic,
    BothAnalytic,
    BothCoanalytic,
    /// alpha u + beta v and conj(alpha) conj(u) - conj(beta) conj(v) analytic.
    Linked,
};

struct HarmonicProductClassification {
    ProductClass kind = ProductClass::NotHarmonic;
    cplx alpha{0.0};
    cplx beta{0.0};
};

std::string to_string(ProductClass kind);

/// Classifies the harmonicity of uv for harmonic u, v.  Throws
/// std::invalid_argument if either input has mixed terms.  BothAnalytic wins
/// over BothCoanalytic when both apply.  For Linked, (alpha, beta) is scaled
/// so that beta == 1 when beta != 0, else alpha == 1.
HarmonicProductClassification classify_harmonic_product(const MonomialSymbol& u,
                                                        const MonomialSymbol& v);

/// True iff alpha d(u)/dzbar == -beta dv/dzbar and alpha du/dz == beta dv/dz
/// hold coefficientwise (up to rounding).
bool linked_conditions_hold(const MonomialSymbol& u, const MonomialSymbol& v, cplx alpha,
                            cplx beta);

/// Finite Blaschke product prod (a_k - w)/(1 - conj(a_k) w).
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(std::vector<DiskPoint> zeros) : zeros_(std::move(zeros)) {}

    [[nodiscard]] const std::vector<DiskPoint>& zeros() const { return zeros_; }

private:
    std::vector<DiskPoint> zeros_;
};

cplx blaschke_eval(const BlaschkeProduct& b, DiskPoint w);
/// Product rule over the factors; exact at the zeros of b.
cplx blaschke_deriv(const BlaschkeProduct& b, DiskPoint w);
/// First n Taylor coefficients at the origin.
std::vector<cplx> blaschke_taylor(const BlaschkeProduct& b, int n);

}  // namespace bergman
