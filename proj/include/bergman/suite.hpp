#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/berezin.hpp"

namespace bergman {

struct SuiteOptions {
    /// Truncation used where a battery works at a single N.
    int n = kDefaultTruncation;
    unsigned long long seed = 20240601ULL;
    BerezinConfig config{};
};

struct SuiteCheck {
    std::string metric;
    double value = 0.0;
    /// Absent for observations that are reported but not asserted.
    std::optional<double> tolerance;
    bool passed = true;
};

struct BatteryResult {
    std::string name;
    std::string description;
    std::vector<SuiteCheck> checks;
    bool passed = true;
    double seconds = 0.0;
};

struct BatteryInfo {
    std::string name;
    std::string description;
};

/// Battery names in run order.
std::vector<BatteryInfo> identity_batteries();

/// Runs one battery.  Throws std::invalid_argument for an unknown name.
BatteryResult run_battery(const std::string& name, const SuiteOptions& options);

/// Runs the selected batteries (all when `only` is empty).
std::vector<BatteryResult> run_identity_suite(const SuiteOptions& options,
                                              const std::vector<std::string>& only = {});

}  // namespace bergman
