#pragma once

#include "dsphere/coeff_poly.hpp"
#include "dsphere/exact_value.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsphere {

struct SuiteConfig {
    std::vector<std::string> suites;  // empty or "all" selects every suite
    PhiSpec phi;
    std::optional<int> truncation;    // ideal membership cap; must be >= 4
    std::uint64_t seed = 1;
    bool failFast = false;
};

enum class Status { Pass, Fail, Error };
const char* statusName(Status s);

struct NamedValue {
    std::string name;
    std::string text;
    std::optional<ExactValue> exact;
};

struct CheckResult {
    std::string suite;
    std::string id;
    std::string anchor;  // the identity being checked, in words
    Status status = Status::Pass;
    std::vector<NamedValue> values;
    std::string detail;
    double elapsedMs = 0;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckResult> checks;  // sorted by suite, then id
    bool allPassed() const;
    std::string text(bool timing = false) const;
    std::string json(bool timing = false) const;
};

const std::vector<std::string>& suiteNames();
// throws ConfigError for unknown suites or a truncation below 4
void validate(const SuiteConfig& cfg);
Report runSuites(const SuiteConfig& cfg);

}  // namespace dsphere
