#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gl3 {

inline constexpr std::uint64_t kDefaultSeed = 20240611ULL;

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;      // worst error seen (mismatch count for exact checks)
    double tolerance = 0.0;
    long count = 0;          // identities or points checked
    std::string detail;      // first failure, or the exception text
};

struct SuiteReport {
    std::string suite;
    int criterion = 0;
    double budget_seconds = 0.0;
    double seconds = 0.0;
    std::vector<CheckResult> checks;  // the last entry is the runtime budget
    bool passed() const;
};

// cg, dmatrix, casimir, ycalc, minimal, gamma, whittaker, lambda_x; criterion i+1 for entry i
const std::vector<std::string>& suite_names();
// throws std::invalid_argument for an unknown name
SuiteReport run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

}  // namespace gl3
