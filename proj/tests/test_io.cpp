#include <doctest.h>

#include <random>
#include <sstream>

#include "bergman/io.hpp"
#include "test_support.hpp"

using namespace bergman;
using namespace bergman::testing;

TEST_CASE("parse_complex") {
    CHECK(parse_complex("0") == cplx{0.0, 0.0});
    CHECK(parse_complex("-1.5") == cplx{-1.5, 0.0});
    CHECK(parse_complex("2i") == cplx{0.0, 2.0});
    CHECK(parse_complex("i") == cplx{0.0, 1.0});
    CHECK(parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(parse_complex("0.3+0.2i") == cplx{0.3, 0.2});
    CHECK(parse_complex("+.5-3e-2i") == cplx{0.5, -0.03});
    CHECK(parse_complex("1-i") == cplx{1.0, -1.0});
    CHECK(parse_complex("1e3") == cplx{1000.0, 0.0});
    for (const char* bad : {"", "abc", "1+2", "0.3 + 0.2i", "1+2j", "--1", "1+-2i", "i2", "1.2.3", "nan"})
        CHECK_THROWS_AS(parse_complex(bad), ParseError);
}

TEST_CASE("parse_symbol") {
    CHECK(parse_symbol("1,1:1") == MonomialSymbol::monomial(1, 1));
    CHECK(parse_symbol("0,0:1") == MonomialSymbol{1.0});
    const auto s = parse_symbol("1,0:1;0,1:-2i; 3,2:0.5+0.25i");
    CHECK(s.coeff(1, 0) == cplx{1.0});
    CHECK(s.coeff(0, 1) == cplx{0.0, -2.0});
    CHECK(s.coeff(3, 2) == cplx{0.5, 0.25});
    // repeated terms accumulate
    CHECK(parse_symbol("1,0:1;1,0:2").coeff(1, 0) == cplx{3.0});
    CHECK(parse_symbol("1,0:1;1,0:-1").empty());
    for (const char* bad : {"", "1,1", "1:1", "a,1:1", "-1,0:1", "1,0:x", "1,0:1;", ";1,0:1", "1;0:1", "1,0,0:1"})
        CHECK_THROWS_AS(parse_symbol(bad), ParseError);
}

TEST_CASE("format_symbol round trip") {
    std::mt19937_64 rng(60);
    for (int i = 0; i < 30; ++i) {
        const auto s = random_symbol(rng, 6, 5);
        CHECK(parse_symbol(format_symbol(s)) == s);
    }
    CHECK(parse_symbol(format_symbol(MonomialSymbol{})).empty());
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("parse_point_list") {
    const auto pts = parse_point_list("0.5,0.75,-0.2+0.1i");
    REQUIRE(pts.size() == 3);
    CHECK(pts[2].value() == cplx{-0.2, 0.1});
    CHECK_THROWS_AS(parse_point_list("0.5,1"), ParseError);
    CHECK_THROWS_AS(parse_point_list("0.5,,0.2"), ParseError);
    CHECK_THROWS_AS(parse_point_list(""), ParseError);
    CHECK_THROWS_AS(parse_point_list("0.9+0.9i"), ParseError);
}

TEST_CASE("operator json") {
    std::mt19937_64 rng(61);
    const auto t = toeplitz_exact(random_symbol(rng, 4, 5), 6);
    const auto j = operator_to_json(t);
    CHECK(j["dim"] == 6);
    CHECK(j["basis"] == "orthonormal-monomial");
    CHECK(j["entries"].size() == 6);
    CHECK(j["entries"][0].size() == 6);
    CHECK(j["entries"][0][0].size() == 2);
    const auto back = operator_from_json(nlohmann::json::parse(j.dump()));
    CHECK((back.matrix() - t.matrix()).cwiseAbs().maxCoeff() <= 1e-11 * t.matrix().cwiseAbs().maxCoeff());
    // row-major: entries[q][p] = <S e_p, e_q>
    const auto wbar = operator_to_json(toeplitz_exact(MonomialSymbol::monomial(0, 1), 3));
    CHECK(std::abs(wbar["entries"][0][1][0].get<double>() - std::sqrt(0.5)) < 1e-12);

    auto bad = j;
    bad["basis"] = "monomial";
    CHECK_THROWS_AS(operator_from_json(bad), ParseError);
    bad = j;
    bad["dim"] = 5;
    CHECK_THROWS_AS(operator_from_json(bad), ParseError);
    bad = j;
    bad["entries"][2].erase(0);
    CHECK_THROWS_AS(operator_from_json(bad), ParseError);
}

TEST_CASE("profile csv and json") {
    DecayProfile p{"field", {0.5, 0.0}, {{0.5, cplx{0.5, 0.0}, cplx{1.0 / 3.0, 0.0}, "ok"},
                                        {0.75, cplx{0.75, 0.0}, cplx{0.0, -2.0}, "error: a, b"}}};
    const auto csv = profile_to_csv(p);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,re_z,im_z,value_re,value_im,flag");
    std::getline(in, line);
    CHECK(line == "0.5,0.5,0,0.333333333333,0,ok");
    std::getline(in, line);
    CHECK(line == "0.75,0.75,0,0,-2,\"error: a, b\"");

    const auto j = profile_to_json(p);
    CHECK(j["label"] == "field");
    CHECK(j["samples"].size() == 2);
    CHECK(j["samples"][0]["value"][0].get<double>() == 0.333333333333);
    CHECK(j["samples"][1]["flag"] == "error: a, b");
}

TEST_CASE("report json embeds config and verdict") {
    BerezinConfig cfg;
    cfg.trunc = 32;
    const auto w = MonomialSymbol::monomial(1, 0);
    const auto rep = commutator_compactness_indicator(w, w, default_schedule(6), cfg);
    const auto j = compactness_to_json(rep, {{"f", "1,0:1"}, {"g", "1,0:1"}}, cfg);
    for (const char* key : {"inputs", "config", "profiles", "residuals", "verdict"}) CHECK(j.contains(key));
    CHECK(j["config"]["trunc"] == 32);
    CHECK(j["config"]["n_radial"] == cfg.n_radial);
    CHECK(j["config"]["tol"] == cfg.tol);
    CHECK(j["profiles"].size() == 2);
    CHECK(j["verdict"] == rep.verdict);
    // deterministic output
    CHECK(j.dump() == compactness_to_json(rep, {{"f", "1,0:1"}, {"g", "1,0:1"}}, cfg).dump());
}
