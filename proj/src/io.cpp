#include "bergman/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace bergman {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, std::string_view context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + s + "' in '" + std::string(context) + "'");
    }
}

int to_exponent(std::string_view s, std::string_view context) {
    const std::string str(trim(s));
    if (str.empty() || str.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent '" + str + "' in term '" + std::string(context) + "'");
    return std::stoi(str);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + '"';
}

json complex_json(cplx c) { return complex_to_json(c); }

}  // namespace

double r12(double x) {
    if (!std::isfinite(x)) return x;
    if (x == 0.0) return 0.0;  // drop the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json complex_to_json(cplx c) { return json::array({r12(c.real()), r12(c.imag())}); }

cplx parse_complex(std::string_view text) {
    static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex real_only("^([+-]?" + num + ")$");
    static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
    static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, real_only)) return {to_double(m[1], text), 0.0};
    if (std::regex_match(s, m, imag_only)) {
        const double mag = m[2].matched ? to_double(m[2], text) : 1.0;
        return {0.0, m[1] == "-" ? -mag : mag};
    }
    if (std::regex_match(s, m, both)) {
        const double mag = m[3].matched ? to_double(m[3], text) : 1.0;
        return {to_double(m[1], text), m[2] == "-" ? -mag : mag};
    }
    throw ParseError("bad complex literal '" + s + "' (expected a+bi)");
}

MonomialSymbol parse_symbol(std::string_view text) {
    MonomialSymbol sym;
    if (trim(text).empty()) throw ParseError("empty symbol");
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view term = trim(text.substr(start, end - start));
        if (term.empty()) throw ParseError("empty term in symbol '" + std::string(text) + "'");
        const auto colon = term.find(':');
        const auto comma = term.find(',');
        if (colon == std::string_view::npos || comma == std::string_view::npos || comma > colon)
            throw ParseError("bad term '" + std::string(term) + "' (expected j,k:coef)");
        const int j = to_exponent(term.substr(0, comma), term);
        const int k = to_exponent(term.substr(comma + 1, colon - comma - 1), term);
        sym.add(j, k, parse_complex(trim(term.substr(colon + 1))));
        start = end + 1;
    }
    return sym;
}

std::vector<DiskPoint> parse_point_list(std::string_view text) {
    std::vector<DiskPoint> pts;
    if (trim(text).empty()) throw ParseError("empty point list");
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const cplx c = parse_complex(trim(text.substr(start, end - start)));
        if (!DiskPoint::admissible(c))
            throw ParseError("point " + format_complex(c) + " lies outside the disk");
        pts.emplace_back(c);
        start = end + 1;
    }
    return pts;
}

std::string format_complex(cplx c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    return buf;
}

std::string format_symbol(const MonomialSymbol& a) {
    if (a.empty()) return "0,0:0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first) out << ';';
        first = false;
        out << e.j << ',' << e.k << ':' << format_complex(c);
    }
    return out.str();
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json operator_to_json(const TruncatedOperator& s) {
    json rows = json::array();
    for (int q = 0; q < s.dim(); ++q) {
        json row = json::array();
        for (int p = 0; p < s.dim(); ++p) row.push_back(complex_json(s.entry(q, p)));
        rows.push_back(std::move(row));
    }
    return {{"dim", s.dim()}, {"basis", "orthonormal-monomial"}, {"entries", std::move(rows)}};
}

TruncatedOperator operator_from_json(const json& j) {
    if (!j.is_object() || j.value("basis", "") != "orthonormal-monomial")
        throw ParseError("operator JSON must carry basis \"orthonormal-monomial\"");
    const int dim = j.at("dim").get<int>();
    const auto& rows = j.at("entries");
    if (dim < 1 || !rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw ParseError("operator JSON: entries do not match dim");
    Matrix m(dim, dim);
    for (int q = 0; q < dim; ++q) {
        const auto& row = rows[static_cast<std::size_t>(q)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("operator JSON: ragged row " + std::to_string(q));
        for (int p = 0; p < dim; ++p) {
            const auto& e = row[static_cast<std::size_t>(p)];
            m(q, p) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
        }
    }
    return TruncatedOperator{std::move(m)};
}

std::string profile_to_csv(const DecayProfile& profile) {
    std::ostringstream out;
    out << "t,re_z,im_z,value_re,value_im,flag\n";
    for (const auto& s : profile.samples) {
        out << format_real(s.t) << ',' << format_real(s.z.real()) << ',' << format_real(s.z.imag())
            << ',' << format_real(s.value.real()) << ',' << format_real(s.value.imag()) << ','
            << csv_field(s.flag) << '\n';
    }
    return out.str();
}

json profile_to_json(const DecayProfile& profile) {
    json samples = json::array();
    for (const auto& s : profile.samples) {
        samples.push_back({{"t", r12(s.t)},
                           {"z", complex_json(s.z)},
                           {"value", complex_json(s.value)},
                           {"flag", s.flag}});
    }
    return {{"label", profile.label},
            {"path", {{"theta", profile.path.theta}, {"aperture", profile.path.aperture}}},
            {"samples", std::move(samples)}};
}

json config_to_json(const BerezinConfig& c) {
    return {{"trunc", c.trunc},     {"tol", c.tol},           {"n_radial", c.n_radial},
            {"n_angular", c.n_angular}, {"fd_step", c.fd_step}, {"richardson", c.richardson},
            {"threshold", c.threshold}};
}

json compactness_to_json(const CompactnessReport& r, const json& inputs, const BerezinConfig& config) {
    json residuals = {{"reliable_radius", r12(r.reliable_radius)},
                      {"inner_rows", r.inner_rows},
                      {"final_derivative", r12(std::abs(r.derivative_profile.samples.back().value))},
                      {"final_operator", r12(std::abs(r.operator_profile.samples.back().value))},
                      {"unreliable_samples", r.unreliable_samples}};
    json zeros = json::array();
    for (const auto& z : r.zero_samples) zeros.push_back({{"zero", complex_json(z.zero)}, {"value", r12(z.value)}});
    residuals["zero_samples"] = std::move(zeros);
    if (r.zero_floor) residuals["zero_floor"] = r12(*r.zero_floor);
    if (r.zero_max) residuals["zero_max"] = r12(*r.zero_max);
    return {{"inputs", inputs},
            {"config", config_to_json(config)},
            {"profiles", json::array({profile_to_json(r.derivative_profile),
                                      profile_to_json(r.operator_profile)})},
            {"residuals", std::move(residuals)},
            {"verdict", r.verdict}};
}

}  // namespace bergman
