// Acceptance battery runner: one pass/fail line per criterion, then a
// negative control proving the series-coefficient check can actually fail.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "typicality/report.hpp"

namespace {

int usage(const char* argv0) {
    std::fprintf(stderr,
                 "usage: %s [--cli PATH] [--samples N] [--seed S] [--workers W]"
                 " [--inject-bernoulli-error]\n",
                 argv0);
    return 2;
}

void print_results(const std::vector<typicality::CriterionResult>& results) {
    for (const auto& r : results) {
        std::printf("[%s] %2d %-28s (%6.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    typicality::ReportOptions options;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> const char* {
            if (i + 1 >= argc) return nullptr;
            return argv[++i];
        };
        if (arg == "--cli") {
            const char* v = next();
            if (!v) return usage(argv[0]);
            options.cli_path = v;
        } else if (arg == "--samples") {
            const char* v = next();
            if (!v) return usage(argv[0]);
            options.mc_samples = std::strtoull(v, nullptr, 10);
        } else if (arg == "--seed") {
            const char* v = next();
            if (!v) return usage(argv[0]);
            options.seed = std::strtoull(v, nullptr, 10);
        } else if (arg == "--workers") {
            const char* v = next();
            if (!v) return usage(argv[0]);
            options.workers = std::atoi(v);
        } else if (arg == "--inject-bernoulli-error") {
            options.inject_bernoulli_error = true;
        } else {
            return usage(argv[0]);
        }
    }

    const std::vector<typicality::CriterionResult> results =
        typicality::run_acceptance_battery(options);
    print_results(results);
    int passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    const bool accepted = typicality::all_passed(results);
    std::printf("%s %d/%d criteria\n", accepted ? "ACCEPTED" : "REJECTED", passed,
                static_cast<int>(results.size()));

    if (options.inject_bernoulli_error) {
        // Caller asked for the corrupted run directly; report it as-is.
        return accepted ? 0 : 1;
    }

    // Negative control: a corrupted series coefficient must be caught by the
    // series-structure criterion, otherwise that check is vacuous.
    typicality::ReportOptions corrupted = options;
    corrupted.inject_bernoulli_error = true;
    corrupted.mc_samples = 1000;
    corrupted.cli_path.clear();
    bool control_caught = false;
    for (const auto& r : typicality::run_acceptance_battery(corrupted)) {
        if (r.name == "series-structure" && !r.pass) control_caught = true;
    }
    std::printf("[%s] negative control: injected series error is caught\n",
                control_caught ? "PASS" : "FAIL");

    return accepted && control_caught ? 0 : 1;
}
