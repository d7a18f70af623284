#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdm {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_residual = 0.0;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 12345;
    /// Scales every QFI value used inside the checks; anything other than 1.0
    /// is a deliberate fault injection for testing the harness itself.
    double qfi_mutation = 1.0;
    /// Trade thoroughness for speed (sample counts divide by this).
    int thinning = 1;
};

/// Run one of the invariant suites: "inequality", "oracle", "unitary",
/// "monotone", "cq", or "all".
std::vector<CheckResult> run_checks(const std::string& suite, const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qdm
