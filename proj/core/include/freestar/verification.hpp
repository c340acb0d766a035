#pragma once

// The umbrella verification suite: one check per acceptance criterion, every
// bound and tolerance pinned here. The CLI `verify` command and the
// acceptance test binary both run this list.

#include <string>
#include <vector>

namespace freestar {

struct CheckOptions {
    bool fast = false;  // shrink enumeration bounds (skips n > 16 style work)
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options = {});

// Machine-readable summary: per-check booleans, details, timings.
std::string checks_summary_json(const std::vector<CheckResult>& results);

}  // namespace freestar
