#include <doctest.h>

#include <set>

#include "bergman/suite.hpp"

using namespace bergman;

TEST_CASE("battery catalogue") {
    const auto all = identity_batteries();
    std::set<std::string> names;
    for (const auto& b : all) {
        CHECK_FALSE(b.description.empty());
        names.insert(b.name);
    }
    CHECK(names.size() == all.size());
    CHECK(names.count("semicommutator") == 1);
    CHECK(names.count("covariance") == 1);
    CHECK_THROWS_AS(run_battery("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(run_identity_suite({}, {"semicommutator", "nope"}), std::invalid_argument);
    SuiteOptions tiny;
    tiny.n = 4;
    CHECK_THROWS_AS(run_battery("semicommutator", tiny), std::invalid_argument);
}

TEST_CASE("every battery passes at shipped tolerances") {
    const auto results = run_identity_suite({});
    CHECK(results.size() == identity_batteries().size());
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.passed);
        CHECK_FALSE(r.checks.empty());
        for (const auto& c : r.checks) {
            INFO(c.metric << " = " << c.value);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("filtering and truncation override") {
    const auto only = run_identity_suite({}, {"semicommutator"});
    REQUIRE(only.size() == 1);
    CHECK(only[0].name == "semicommutator");

    SuiteOptions small;
    small.n = 16;
    const auto r16 = run_battery("covariance", small);
    const auto r64 = run_battery("covariance", {});
    auto observed = [](const BatteryResult& r) {
        for (const auto& c : r.checks)
            if (c.metric.find("leading 8 block, N = trunc") != std::string::npos) return c.value;
        return -1.0;
    };
    CHECK(observed(r16) > observed(r64));
    CHECK(observed(r64) >= 0.0);
}
