#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bergman/berezin.hpp"
#include "bergman/operators.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "a", "bi", "a+bi", "a-bi", "i", "-i"; no spaces.
cplx parse_complex(std::string_view text);
/// Semicolon-separated terms "j,k:coef", e.g. "1,1:1" for |w|^2.
MonomialSymbol parse_symbol(std::string_view text);
/// Comma-separated complex literals, each inside the disk.
std::vector<DiskPoint> parse_point_list(std::string_view text);

std::string format_complex(cplx c);
/// Round-trips through parse_symbol.
std::string format_symbol(const MonomialSymbol& a);
/// 12 significant digits.
std::string format_real(double x);
/// Rounds to 12 significant digits, the precision of every report value.
double r12(double x);
/// [re, im], each rounded by r12.
nlohmann::json complex_to_json(cplx c);

/// {"dim": N, "basis": "orthonormal-monomial", "entries": [[[re, im], ...], ...]}, row-major.
nlohmann::json operator_to_json(const TruncatedOperator& s);
TruncatedOperator operator_from_json(const nlohmann::json& j);

/// Header "t,re_z,im_z,value_re,value_im,flag".
std::string profile_to_csv(const DecayProfile& profile);
nlohmann::json profile_to_json(const DecayProfile& profile);
nlohmann::json config_to_json(const BerezinConfig& config);
/// {inputs, config, profiles[], residuals{}, verdict}
nlohmann::json compactness_to_json(const CompactnessReport& report, const nlohmann::json& inputs,
                                   const BerezinConfig& config);

}  // namespace bergman
