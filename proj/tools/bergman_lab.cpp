// Command-line front end for the Bergman-space operator lab.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 usage or parse error,
// 3 reliability flag under --strict, 4 identity-suite failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/berezin.hpp"
#include "bergman/io.hpp"
#include "bergman/suite.hpp"

using namespace bergman;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnreliable = 3;
constexpr int kExitInvariant = 4;

struct Common {
    std::string out;
    std::string format = "json";
    int trunc = kDefaultTruncation;
    int nr = DiskQuadrature::kDefaultRadial;
    int ntheta = DiskQuadrature::kDefaultAngular;
    double tol = 1e-10;
    bool strict = false;
    double fd_step = 1e-3;
    bool richardson = false;

    [[nodiscard]] BerezinConfig config() const {
        BerezinConfig c;
        c.trunc = trunc;
        c.tol = tol;
        c.n_radial = nr;
        c.n_angular = ntheta;
        c.fd_step = fd_step;
        c.richardson = richardson;
        return c;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "Output file (default: stdout)");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--trunc", c.trunc, "Truncation N")->check(CLI::PositiveNumber);
    cmd->add_option("--nr", c.nr, "Radial quadrature nodes")->check(CLI::PositiveNumber);
    cmd->add_option("--ntheta", c.ntheta, "Angular quadrature nodes")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", c.tol, "Series and reliable-radius tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--fd-step", c.fd_step, "Finite-difference step factor")->check(CLI::PositiveNumber);
    cmd->add_flag("--richardson", c.richardson, "Richardson extrapolation of finite differences");
    cmd->add_flag("--strict", c.strict, "Exit 3 when any value is flagged unreliable");
}

struct PathOptions {
    double theta = 0.0;
    double aperture = 0.0;
    int kmax = 10;
    std::string radii;

    void add(CLI::App* cmd) {
        cmd->add_option("--theta", theta, "Boundary point angle");
        cmd->add_option("--aperture", aperture, "Angle between path and radius, |aperture| < pi/2");
        cmd->add_option("--kmax", kmax, "Default schedule r_k = 1 - 2^-k, k = 1..kmax")
            ->check(CLI::Range(1, 39));  // 1 - 2^-40 is inside the boundary margin
        cmd->add_option("--r", radii, "Explicit comma-separated radii, overrides --kmax");
    }
    [[nodiscard]] PathSpec path() const { return {theta, aperture}; }
    [[nodiscard]] std::vector<double> schedule() const {
        if (radii.empty()) return default_schedule(kmax);
        std::vector<double> out;
        std::stringstream in(radii);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ParseError("bad radius '" + item + "'");
            }
        }
        return out;
    }
    [[nodiscard]] json to_json() const {
        json j{{"theta", theta}, {"aperture", aperture}};
        if (radii.empty()) j["kmax"] = kmax;
        else j["r"] = schedule();
        return j;
    }
};

/// Output assembled in memory and written once.
struct Report {
    json doc;
    std::string csv;
    bool unreliable = false;
};

std::string csv_header(const std::string& command, const BerezinConfig& cfg) {
    return "# command=" + command + "\n# config=" + config_to_json(cfg).dump() + "\n";
}

std::string cplx_csv(cplx c) { return format_real(c.real()) + "," + format_real(c.imag()); }

int emit(const Report& r, const Common& c, const std::string& command) {
    const std::string text = c.format == "json" ? r.doc.dump(2) + "\n" : r.csv;
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open '" + c.out + "' for writing");
        f << text;
    }
    if (c.strict && r.unreliable) {
        std::cerr << command << ": unreliable values present (--strict)\n";
        return kExitUnreliable;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct BerezinArgs {
    std::string symbol;
    std::string z = "0";
    std::string route = "all";
};

Report run_berezin(const BerezinArgs& a, const BerezinConfig& cfg) {
    const auto u = parse_symbol(a.symbol);
    const auto points = parse_point_list(a.z);
    const bool all = a.route == "all";
    std::vector<std::string> routes;
    for (const char* r : {"series", "quadrature", "operator"})
        if (all || a.route == r) routes.emplace_back(r);

    const auto rule = build_rule(cfg.n_radial, cfg.n_angular);
    const auto op = toeplitz_exact(u, cfg.trunc);
    Report rep;
    rep.csv = csv_header("berezin", cfg) + "re_z,im_z,route,value_re,value_im,spread,flag\n";
    json samples = json::array();
    double max_spread = 0.0;
    for (const auto& z : points) {
        std::vector<std::pair<cplx, std::string>> vals;
        for (const auto& r : routes) {
            std::string flag = "ok";
            cplx v{0.0};
            try {
                if (r == "series") {
                    v = berezin_symbol_series(u, z, std::min(cfg.tol, 1e-14));
                } else if (r == "quadrature") {
                    v = berezin_symbol_quadrature(evaluator(u), z, rule);
                    if (!quadrature_resolves(z, rule, cfg.tol)) flag = "unreliable";
                } else {
                    v = berezin_operator(op, z);
                    if (!within_reliable_radius(cfg.trunc, z, cfg.tol)) flag = "unreliable";
                }
            } catch (const std::domain_error& ex) {
                flag = std::string("error: ") + ex.what();
            }
            if (flag != "ok") rep.unreliable = true;
            vals.emplace_back(v, flag);
        }
        double spread = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                if (vals[i].second == "ok" && vals[j].second == "ok")
                    spread = std::max(spread, std::abs(vals[i].first - vals[j].first));
        max_spread = std::max(max_spread, spread);
        json values = json::object(), flags = json::object();
        for (std::size_t i = 0; i < routes.size(); ++i) {
            values[routes[i]] = complex_to_json(vals[i].first);
            flags[routes[i]] = vals[i].second;
            rep.csv += cplx_csv(z.value()) + "," + routes[i] + "," + cplx_csv(vals[i].first) + "," +
                       format_real(spread) + "," + vals[i].second + "\n";
        }
        samples.push_back({{"z", complex_to_json(z.value())},
                           {"values", values},
                           {"flags", flags},
                           {"spread", r12(spread)}});
    }
    rep.doc = {{"command", "berezin"},
               {"inputs", {{"symbol", format_symbol(u)}, {"z", a.z}, {"route", a.route}}},
               {"config", config_to_json(cfg)},
               {"samples", samples},
               {"residuals", {{"max_route_spread", r12(max_spread)}}},
               {"reliable", !rep.unreliable}};
    return rep;
}

// ---------------------------------------------------------------------------

std::string matrix_csv(const TruncatedOperator& s) {
    std::string out = "q,p,re,im\n";
    for (int q = 0; q < s.dim(); ++q)
        for (int p = 0; p < s.dim(); ++p)
            out += std::to_string(q) + "," + std::to_string(p) + "," + cplx_csv(s.entry(q, p)) + "\n";
    return out;
}

struct ToeplitzArgs {
    std::string symbol;
    std::string route = "exact";
    std::string z;
};

Report run_toeplitz(const ToeplitzArgs& a, const BerezinConfig& cfg) {
    const auto u = parse_symbol(a.symbol);
    std::optional<DiskPoint> z;
    if (!a.z.empty()) {
        const auto pts = parse_point_list(a.z);
        if (pts.size() != 1) throw ParseError("--z takes a single point");
        z = pts.front();
    }
    Report rep;
    json residuals = json::object();
    std::optional<TruncatedOperator> op;
    if (a.route == "exact") {
        // T_{u o phi_z} through the covariance identity
        op = z ? covariant_toeplitz(u, *z, cfg.trunc) : toeplitz_exact(u, cfg.trunc);
        if (z) residuals["working_rows"] = uz_working_rows(*z, cfg.trunc);
    } else {
        const auto rule = build_rule(cfg.n_radial, cfg.n_angular);
        const auto f = z ? composed_evaluator(u, *z) : evaluator(u);
        const int degree = z ? 0 : u.deg_z() + u.deg_zbar();
        const auto q = toeplitz_quadrature(f, cfg.trunc, rule, degree);
        residuals["moment_residual"] = r12(q.moment_residual);
        residuals["rule_sufficient"] = q.rule_sufficient;
        rep.unreliable = !q.rule_sufficient;
        if (!z) residuals["max_diff_vs_exact"] = r12(max_abs_diff(q.op, toeplitz_exact(u, cfg.trunc)));
        op = q.op;
    }
    json inputs{{"symbol", format_symbol(u)}, {"route", a.route}};
    if (z) inputs["z"] = complex_to_json(z->value());
    rep.doc = {{"command", "toeplitz"},
               {"inputs", inputs},
               {"config", config_to_json(cfg)},
               {"operator", operator_to_json(*op)},
               {"residuals", residuals},
               {"reliable", !rep.unreliable}};
    rep.csv = csv_header("toeplitz", cfg) + "# residuals=" + residuals.dump() + "\n" + matrix_csv(*op);
    return rep;
}

Report run_uz(const std::string& z_text, const BerezinConfig& cfg) {
    const auto pts = parse_point_list(z_text);
    if (pts.size() != 1) throw ParseError("--z takes a single point");
    const DiskPoint z = pts.front();
    const int n = cfg.trunc;
    const auto u = unitary_uz(z, n);
    const int rows = uz_working_rows(z, n);
    const Matrix block = unitary_uz_block(z, rows, n);
    const int half = std::max(1, n / 2);
    const Matrix gram = block.adjoint() * block;
    const double gram_res = (gram - Matrix::Identity(n, n)).topLeftCorner(half, half).cwiseAbs().maxCoeff();
    const Matrix sq = u.matrix() * u.matrix();
    const double sq_res = (sq - Matrix::Identity(n, n)).topLeftCorner(half, half).cwiseAbs().maxCoeff();

    Report rep;
    rep.unreliable = gram_res > 1e-8;
    json residuals{{"working_rows", rows},
                   {"orthonormality_half_block", r12(gram_res)},
                   {"compressed_square_half_block", r12(sq_res)}};
    rep.doc = {{"command", "uz"},
               {"inputs", {{"z", complex_to_json(z.value())}}},
               {"config", config_to_json(cfg)},
               {"operator", operator_to_json(u)},
               {"residuals", residuals},
               {"reliable", !rep.unreliable}};
    rep.csv = csv_header("uz", cfg) + "# residuals=" + residuals.dump() + "\n" + matrix_csv(u);
    return rep;
}

// ---------------------------------------------------------------------------

struct SuiteArgs {
    std::vector<std::string> only;
    int n = 0;
    unsigned long long seed = SuiteOptions{}.seed;
    bool list = false;
};

int run_suite(const SuiteArgs& a, const Common& c) {
    if (a.list) {
        for (const auto& b : identity_batteries()) std::cout << b.name << "  " << b.description << "\n";
        return kExitOk;
    }
    SuiteOptions opts;
    opts.config = c.config();
    opts.n = a.n > 0 ? a.n : c.trunc;
    opts.config.trunc = opts.n;
    opts.seed = a.seed;
    std::vector<std::string> only;
    for (const auto& item : a.only) {
        std::stringstream in(item);
        std::string name;
        while (std::getline(in, name, ',')) only.push_back(name);
    }
    const auto known = identity_batteries();
    for (const auto& name : only)
        if (std::none_of(known.begin(), known.end(), [&](const BatteryInfo& b) { return b.name == name; }))
            throw ParseError("unknown battery '" + name + "' (see --list)");

    const auto results = run_identity_suite(opts, only);
    bool all_passed = true;
    json batteries = json::array();
    Report rep;
    rep.csv = csv_header("identity-suite", opts.config) + "battery,metric,value,tolerance,status\n";
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        json checks = json::array();
        for (const auto& ch : r.checks) {
            json jc{{"metric", ch.metric}, {"value", r12(ch.value)}, {"passed", ch.passed}};
            jc["tolerance"] = ch.tolerance ? json(r12(*ch.tolerance)) : json(nullptr);
            checks.push_back(jc);
            std::string metric = ch.metric;
            std::replace(metric.begin(), metric.end(), ',', ';');
            rep.csv += r.name + "," + metric + "," + format_real(ch.value) + "," +
                       (ch.tolerance ? format_real(*ch.tolerance) : std::string("")) + "," +
                       (ch.tolerance ? (ch.passed ? "pass" : "FAIL") : "info") + "\n";
        }
        batteries.push_back({{"name", r.name},
                             {"description", r.description},
                             {"passed", r.passed},
                             {"checks", checks}});
    }
    rep.doc = {{"command", "identity-suite"},
               {"inputs", {{"only", only}, {"n", opts.n}, {"seed", opts.seed}}},
               {"config", config_to_json(opts.config)},
               {"batteries", batteries},
               {"passed", all_passed}};
    const int code = emit(rep, c, "identity-suite");
    if (!all_passed) {
        for (const auto& r : results)
            if (!r.passed) std::cerr << "identity-suite: battery '" << r.name << "' failed\n";
        return kExitInvariant;
    }
    return code;
}

// ---------------------------------------------------------------------------

struct CommutatorArgs {
    std::string f, g, bf, bg;
    double threshold = 1e-3;
    PathOptions path;
};

AnalyticSymbol analytic_input(const std::string& sym, const std::string& zeros, const char* which) {
    if (!sym.empty() && !zeros.empty())
        throw ParseError(std::string("give either --") + which + " or --blaschke-" + which + ", not both");
    if (!zeros.empty()) return BlaschkeProduct(parse_point_list(zeros));
    if (sym.empty()) throw ParseError(std::string("missing --") + which + " or --blaschke-" + which);
    auto s = parse_symbol(sym);
    if (!is_analytic(s)) throw ParseError(std::string("--") + which + " must be analytic (k = 0 in every term)");
    return s;
}

Report run_commutator(const CommutatorArgs& a, BerezinConfig cfg) {
    cfg.threshold = a.threshold;
    cfg.validate();
    const auto f = analytic_input(a.f, a.bf, "f");
    const bool g_same = a.g == "same" || a.bg == "same";
    const auto g = g_same ? f : analytic_input(a.g, a.bg, "g");
    const auto schedule = a.path.schedule();
    const auto report = commutator_compactness_indicator(f, g, schedule, cfg, a.path.path());

    json inputs{{"path", a.path.to_json()}};
    auto describe = [](const AnalyticSymbol& s) -> json {
        if (const auto* m = std::get_if<MonomialSymbol>(&s)) return {{"symbol", format_symbol(*m)}};
        json zs = json::array();
        for (const auto& z : std::get<BlaschkeProduct>(s).zeros()) zs.push_back(complex_to_json(z.value()));
        return {{"blaschke_zeros", zs}};
    };
    inputs["f"] = describe(f);
    inputs["g"] = describe(g);

    Report rep;
    rep.doc = compactness_to_json(report, inputs, cfg);
    rep.doc["command"] = "commutator";
    bool flagged = report.unreliable_samples || report.verdict == "inconclusive";
    rep.csv = csv_header("commutator", cfg) + "# verdict=" + report.verdict + "\n";
    if (report.zero_floor)
        rep.csv += "# zero_floor=" + format_real(*report.zero_floor) + " zero_max=" + format_real(*report.zero_max) + "\n";
    rep.csv += "profile,t,re_z,im_z,value_re,value_im,flag\n";
    auto add_profile = [&](const char* name, const DecayProfile& p) {
        for (const auto& s : p.samples) {
            if (s.flag.rfind("error", 0) == 0) flagged = true;
            rep.csv += std::string(name) + "," + format_real(s.t) + "," + cplx_csv(s.z) + "," +
                       cplx_csv(s.value) + "," + s.flag + "\n";
        }
    };
    add_profile("derivative", report.derivative_profile);
    add_profile("operator", report.operator_profile);
    for (std::size_t i = 0; i < report.zero_samples.size(); ++i) {
        const auto& zs = report.zero_samples[i];
        rep.csv += "zero," + std::to_string(i + 1) + "," + cplx_csv(zs.zero) + "," + format_real(zs.value) + ",0,ok\n";
    }
    rep.unreliable = flagged;
    return rep;
}

// ---------------------------------------------------------------------------

struct DecayArgs {
    std::string symbol;
    std::vector<std::string> factors;
    std::string field = "transform-gap";
    PathOptions path;
};

const std::vector<std::string> kDecayFields{"transform-gap",     "operator-gap",       "invariant-laplacian",
                                            "moment-laplacian", "factored-laplacian", "localization"};

Report run_decay(const DecayArgs& a, const BerezinConfig& cfg) {
    const auto schedule = a.path.schedule();
    const int n = cfg.trunc;
    const auto rule = build_rule(cfg.n_radial, cfg.n_angular);
    const double series_tol = std::min(cfg.tol, 1e-14);

    MonomialSymbol u;
    std::vector<MonomialSymbol> factors;
    if (a.field == "factored-laplacian") {
        if (a.factors.empty()) throw ParseError("factored-laplacian needs --factor (repeatable)");
        for (const auto& f : a.factors) {
            factors.push_back(parse_symbol(f));
            if (!is_harmonic(factors.back())) throw ParseError("--factor '" + f + "' is not harmonic");
        }
    } else {
        if (a.symbol.empty()) throw ParseError("--symbol is required for field " + a.field);
        u = parse_symbol(a.symbol);
    }
    const auto op = a.field == "operator-gap" ? toeplitz_exact(u, n) : TruncatedOperator::identity(1);

    ScalarField field;
    field.label = a.field;
    if (a.field == "transform-gap") {
        field.eval = [&](DiskPoint z) { return berezin_symbol_series(u, z, series_tol) - sym_evaluate(u, z); };
    } else if (a.field == "operator-gap") {
        field.eval = [&](DiskPoint z) { return berezin_operator(op, z) - sym_evaluate(u, z); };
        field.reliable = [&](DiskPoint z) { return within_reliable_radius(n, z, cfg.tol); };
    } else if (a.field == "invariant-laplacian") {
        field.eval = [&](DiskPoint z) {
            return invariant_laplacian([&](DiskPoint p) { return berezin_symbol_series(u, p, series_tol); }, z,
                                       cfg.fd_step, cfg.richardson);
        };
    } else if (a.field == "moment-laplacian") {
        field.eval = [&](DiskPoint z) { return invariant_laplacian_moment(u, z, rule); };
        field.reliable = [&](DiskPoint z) { return quadrature_resolves(z, rule, cfg.tol); };
    } else if (a.field == "factored-laplacian") {
        field.eval = [&](DiskPoint z) { return factored_invariant_laplacian(factors, z); };
    } else {
        field.eval = [&](DiskPoint z) { return cplx{localization_norm(u, z, series_tol)}; };
    }
    const auto profile = decay_profile(field, a.path.path(), schedule);

    Report rep;
    for (const auto& s : profile.samples)
        if (s.flag != "ok") rep.unreliable = true;
    json inputs{{"field", a.field}, {"path", a.path.to_json()}};
    if (factors.empty()) {
        inputs["symbol"] = format_symbol(u);
    } else {
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(format_symbol(f));
        inputs["factors"] = fs;
    }
    const auto& last = profile.samples.back();
    rep.doc = {{"command", "decay"},
               {"inputs", inputs},
               {"config", config_to_json(cfg)},
               {"profiles", json::array({profile_to_json(profile)})},
               {"residuals", {{"final_abs_value", r12(std::abs(last.value))}}},
               {"reliable", !rep.unreliable}};
    rep.csv = csv_header("decay", cfg) + "# field=" + a.field + "\n" + profile_to_csv(profile);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman-space operator lab: Toeplitz truncations, Berezin transforms, boundary profiles"};
    app.require_subcommand(1);

    Common common;

    BerezinArgs berezin_args;
    auto* berezin = app.add_subcommand("berezin", "Berezin transform of a symbol by series, quadrature and matrix routes");
    berezin->add_option("--symbol", berezin_args.symbol, "Symbol terms j,k:coef joined by ';'")->required();
    berezin->add_option("--z", berezin_args.z, "Comma-separated points a+bi");
    berezin->add_option("--route", berezin_args.route, "Route")
        ->check(CLI::IsMember({"series", "quadrature", "operator", "all"}));
    add_common(berezin, common);

    ToeplitzArgs toeplitz_args;
    auto* toeplitz = app.add_subcommand("toeplitz", "Truncated Toeplitz matrix of a symbol");
    toeplitz->add_option("--symbol", toeplitz_args.symbol, "Symbol terms j,k:coef joined by ';'")->required();
    toeplitz->add_option("--route", toeplitz_args.route, "Route")->check(CLI::IsMember({"exact", "quadrature"}));
    toeplitz->add_option("--z", toeplitz_args.z, "Compose the symbol with phi_z");
    add_common(toeplitz, common);

    std::string uz_z;
    auto* uz = app.add_subcommand("uz", "Truncated Mobius unitary U_z");
    uz->add_option("--z", uz_z, "Point a+bi")->required();
    add_common(uz, common);

    SuiteArgs suite_args;
    auto* suite = app.add_subcommand("identity-suite", "Run the identity batteries and report pass/fail");
    suite->add_option("--only", suite_args.only, "Battery names (repeatable or comma-separated)");
    suite->add_option("--n", suite_args.n, "Truncation for the batteries (default: --trunc)")->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_args.seed, "Random seed");
    suite->add_flag("--list", suite_args.list, "List batteries and exit");
    add_common(suite, common);

    CommutatorArgs comm_args;
    auto* comm = app.add_subcommand("commutator", "Boundary profiles for T_conj(f) T_g - T_g T_conj(f)");
    comm->add_option("--f", comm_args.f, "Analytic symbol f");
    comm->add_option("--g", comm_args.g, "Analytic symbol g, or 'same'");
    comm->add_option("--blaschke-f", comm_args.bf, "Zeros of a finite Blaschke product f");
    comm->add_option("--blaschke-g", comm_args.bg, "Zeros of a finite Blaschke product g, or 'same'");
    comm->add_option("--threshold", comm_args.threshold, "Verdict threshold")->check(CLI::PositiveNumber);
    comm_args.path.add(comm);
    add_common(comm, common);

    DecayArgs decay_args;
    auto* decay = app.add_subcommand("decay", "Profile of a symbol-derived field along a path to the boundary");
    decay->add_option("--symbol", decay_args.symbol, "Symbol terms j,k:coef joined by ';'");
    decay->add_option("--factor", decay_args.factors, "Harmonic factor (repeatable) for factored-laplacian");
    decay->add_option("--field", decay_args.field, "Field")->check(CLI::IsMember(kDecayFields));
    decay_args.path.add(decay);
    add_common(decay, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const BerezinConfig cfg = common.config();
        cfg.validate();
        if (*berezin) return emit(run_berezin(berezin_args, cfg), common, "berezin");
        if (*toeplitz) return emit(run_toeplitz(toeplitz_args, cfg), common, "toeplitz");
        if (*uz) return emit(run_uz(uz_z, cfg), common, "uz");
        if (*suite) return run_suite(suite_args, common);
        if (*comm) return emit(run_commutator(comm_args, cfg), common, "commutator");
        if (*decay) return emit(run_decay(decay_args, cfg), common, "decay");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
