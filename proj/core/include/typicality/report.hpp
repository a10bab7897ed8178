#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace typicality {

struct ReportOptions {
    std::uint64_t seed = 12345;
    int workers = 4;
    std::uint64_t mc_samples = 100000;
    // When set, the determinism criterion additionally runs this executable's
    // mc subcommand twice and compares output bytes.
    std::string cli_path;
    // Negative-control hook: corrupts one series coefficient before the
    // coefficient check so the wiring of that criterion can be exercised.
    bool inject_bernoulli_error = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance battery (14 criteria) and returns one row each.
std::vector<CriterionResult> run_acceptance_battery(const ReportOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace typicality
