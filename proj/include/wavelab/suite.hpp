#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wavelab::suite {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct SuiteOptions {
    std::string out_dir = "suite-out";
    std::uint64_t seed = 1;
    int threads = 0;
    double tolerance_scale = 1.0;
};

/// Runs every acceptance check at its pinned tolerance, writes artifacts and
/// a machine-readable summary (one `PASS|FAIL name measured bound` line per
/// check) under out_dir, and returns the per-check results.
std::vector<CheckResult> run_all(const SuiteOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

std::string summary_lines(const std::vector<CheckResult>& results);

}  // namespace wavelab::suite
