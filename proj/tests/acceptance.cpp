// Acceptance suite: runs every verification check at full bounds and prints
// one pass/fail line per criterion. Exit 0 iff all pass.

#include <cstdio>

#include "freestar/verification.hpp"

int main() {
    const auto results = freestar::run_acceptance_checks({/*fast=*/false});
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        all = all && r.passed;
        total += r.seconds;
        std::printf("%s  criterion %2d  %-28s  %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%s (%zu criteria, %.2fs)\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                results.size(), total);
    return all ? 0 : 1;
}
