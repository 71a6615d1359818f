#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bergman/disk.hpp"
#include "bergman/operators.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

struct BerezinConfig {
    int trunc = kDefaultTruncation;
    /// Series tail tolerance; also the reliable-radius tolerance.
    double tol = 1e-10;
    int n_radial = DiskQuadrature::kDefaultRadial;
    int n_angular = DiskQuadrature::kDefaultAngular;
    /// Finite-difference step is fd_step * (1 - |z|).
    double fd_step = 1e-3;
    bool richardson = false;
    /// Verdict threshold at the final path sample.
    double threshold = 1e-3;

    /// Throws std::invalid_argument unless tol > 0, trunc >= 8 and rule sizes >= 1.
    void validate() const;
};

/// A named pure field on the disk.  `reliable`, when set, marks samples whose
/// value should not be trusted (truncation or quadrature limits).
struct ScalarField {
    std::function<cplx(DiskPoint)> eval;
    std::string label;
    std::function<bool(DiskPoint)> reliable;
};

// ---------------------------------------------------------------------------
// Berezin transform
// ---------------------------------------------------------------------------

/// <S k_z, k_z> for the compression S (extended by zero).
cplx berezin_operator(const TruncatedOperator& s, DiskPoint z);

/// Tail of <k_z, k_z> outside the first n basis vectors is below tol:
/// (n + 1) |z|^{2n} / (1 - |z|^2)^2 < tol.
bool within_reliable_radius(int n, DiskPoint z, double tol);
/// Largest radius passing within_reliable_radius.
double reliable_radius(int n, double tol);

/// u~(z) from the closed monomial series, summed until the geometric tail < tol.
cplx berezin_symbol_series(const MonomialSymbol& u, DiskPoint z, double tol = 1e-14);

/// u~(z) = integral of u |k_z|^2 dA by quadrature.
cplx berezin_symbol_quadrature(const Evaluator& u, DiskPoint z, const DiskQuadrature& rule);

/// True when the rule resolves the |k_z|^2 peak to about `tol`.
bool quadrature_resolves(DiskPoint z, const DiskQuadrature& rule, double tol = 1e-10);

struct ProductBerezin {
    /// Berezin transform of the compressed product T_{u_1} ... T_{u_n}.
    cplx value;
    /// Same quantity as <T_{u_1 o phi_z} ... T_{u_n o phi_z} e_0, e_0>.
    cplx covariant_value;
    double residual;
};

ProductBerezin berezin_of_product(const std::vector<MonomialSymbol>& factors, DiskPoint z,
                                  int n = kDefaultTruncation);

// ---------------------------------------------------------------------------
// Laplacians
// ---------------------------------------------------------------------------

/// Five-point Laplacian with h = h0 (1 - |z|).  Throws std::domain_error when
/// the stencil leaves the disk.  With richardson, combines steps h and h/2.
cplx laplacian_fd(const std::function<cplx(DiskPoint)>& field, DiskPoint z, double h0 = 1e-3,
                  bool richardson = false);

/// (Delta S~)(0) = 8 <S e_1, e_1> - 8 <S e_0, e_0>.  Needs dim >= 2.
cplx laplacian_berezin_at_zero(const TruncatedOperator& s);
/// (Delta u~)(0) = 8 integral u (2|w|^2 - 1) dA, from exact moments.
cplx laplacian_berezin_at_zero(const MonomialSymbol& u);

/// (1 - |z|^2)^2 (Delta field)(z) by finite differences.
cplx invariant_laplacian(const std::function<cplx(DiskPoint)>& field, DiskPoint z,
                         double h0 = 1e-3, bool richardson = false);

/// 8 integral (u o phi_z)(w) (2|w|^2 - 1) dA(w); equals (1-|z|^2)^2 (Delta u~)(z).
cplx invariant_laplacian_moment(const MonomialSymbol& u, DiskPoint z, const DiskQuadrature& rule);

/// (1 - |z|^2)^2 (Delta u)(z) for u = product of harmonic factors.
/// Throws std::invalid_argument if a factor is not harmonic.
cplx factored_invariant_laplacian(const std::vector<MonomialSymbol>& harmonic_factors, DiskPoint z);

// ---------------------------------------------------------------------------
// Mean values and localization
// ---------------------------------------------------------------------------

/// Integral of u o phi_z over D; equals u~(z).
cplx mean_value_transform(const MonomialSymbol& u, DiskPoint z, const DiskQuadrature& rule);

/// ||(u - u(z)) k_z||_2 via  |u|^2~(z) - 2 Re(conj(u(z)) u~(z)) + |u(z)|^2.
double localization_norm(const MonomialSymbol& u, DiskPoint z, double tol = 1e-14);

// ---------------------------------------------------------------------------
// Boundary profiles
// ---------------------------------------------------------------------------

struct PathSpec {
    /// Boundary point e^{i theta} approached.
    double theta = 0.0;
    /// Angle between the path and the radius; 0 is radial.  |aperture| < pi/2.
    double aperture = 0.0;
};

struct ProfileSample {
    double t;
    cplx z;
    cplx value;
    std::string flag;  // "ok", "unreliable", "symbol-route" or "error: ..."
};

struct DecayProfile {
    std::string label;
    PathSpec path;
    std::vector<ProfileSample> samples;
};

/// r_k = 1 - 2^{-k}, k = 1..k_max.
std::vector<double> default_schedule(int k_max = 10);

/// Point at parameter r on the path: e^{i theta} (1 - (1 - r) e^{i aperture}).
cplx path_point(const PathSpec& path, double r);

/// Samples the field along the path.  Throws std::invalid_argument unless the
/// schedule is increasing in (0, 1) and |z(t)| increases strictly.
DecayProfile decay_profile(const ScalarField& field, const PathSpec& path,
                           const std::vector<double>& schedule);

/// Analytic input to the commutator study.
using AnalyticSymbol = std::variant<MonomialSymbol, BlaschkeProduct>;

struct ZeroSample {
    cplx zero;
    double value;
};

struct CompactnessReport {
    int trunc = 0;
    int inner_rows = 0;
    double reliable_radius = 0.0;
    double threshold = 0.0;
    /// (1 - |z|^2)^2 |f'(z) g'(z)| along the path.
    DecayProfile derivative_profile;
    /// |(T_{conj f} T_g - T_g T_{conj f})~(z)| along the path.
    DecayProfile operator_profile;
    /// derivative quantity at the zeros of Blaschke inputs.
    std::vector<ZeroSample> zero_samples;
    std::optional<double> zero_floor;
    std::optional<double> zero_max;
    /// "decay-consistent", "non-decaying" or "inconclusive".
    std::string verdict;
    bool unreliable_samples = false;
};

/// Throws std::invalid_argument if a MonomialSymbol input is not analytic.
CompactnessReport commutator_compactness_indicator(const AnalyticSymbol& f, const AnalyticSymbol& g,
                                                   const std::vector<double>& schedule,
                                                   const BerezinConfig& config,
                                                   const PathSpec& path = {});

struct CovarianceResiduals {
    /// |S~(phi_z(w)) - (U_z S U_z)~(w)|
    double value_residual;
    /// |Delta(S~ o phi_z)(w) (1-|w|^2)^2 - (1-|phi_z(w)|^2)^2 (Delta S~)(phi_z(w))|
    double laplacian_residual;
    bool reliable;
};

CovarianceResiduals covariance_field_check(const TruncatedOperator& s, DiskPoint z, DiskPoint w,
                                           const BerezinConfig& config = {});

/// Least-squares recovery of the leading dim x dim block of S from samples of S~.
Matrix fit_operator_from_berezin(const std::vector<DiskPoint>& points,
                                 const std::vector<cplx>& values, int dim);

}  // namespace bergman
