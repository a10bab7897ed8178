#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "typicality/mutual_information.hpp"
#include "typicality/pclt.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = typicality::cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}).code == 0);
    const CliRun version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("0.1.0") != std::string::npos);
    const CliRun sub_help = run({"mi", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--method") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run({}).code == 2);                                      // missing subcommand
    CHECK(run({"tails"}).code == 2);                               // missing required dims
    CHECK(run({"tails", "--ds", "2", "--de", "6", "--bogus"}).code == 2);
    CHECK(run({"mi", "--da", "2", "--db", "2", "--de", "4", "--method", "wrong"}).code == 2);
    CHECK(run({"tails", "--ds", "2", "--de", "6", "--precision", "99"}).code == 2);
    CHECK(run({"tails", "--ds", "0", "--de", "6"}).code == 2);     // domain error from the core
}

TEST_CASE("series outside the small-AB regime exits with code 3") {
    const CliRun r = run({"series", "--da", "3", "--db", "4", "--de", "2"});
    CHECK(r.code == 3);
    const CliRun mi_series = run({"mi", "--da", "3", "--db", "4", "--de", "2",
                                  "--method", "series"});
    CHECK(mi_series.code == 3);
    CHECK(mi_series.err.find("d_a*d_b <= d_e") != std::string::npos);
}

TEST_CASE("exact mutual information outside the regime still reports, with a note") {
    const CliRun r = run({"mi", "--da", "3", "--db", "4", "--de", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("naive_small_ab") != std::string::npos);
    CHECK(r.err.find("swapped-regime") != std::string::npos);

    const CliRun all = run({"mi", "--da", "3", "--db", "4", "--de", "2", "--method", "all"});
    CHECK(all.code == 3);
    CHECK(all.out.find("total") != std::string::npos);  // exact part still emitted
}

TEST_CASE("csv header for the tail comparison is stable") {
    const CliRun r = run({"tails", "--ds", "2", "--de", "6", "--threshold", "0.95",
                          "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "p,exact_density,gaussian_density,exact_tail,gaussian_tail");
    // One data row follows the header.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("repeated invocations produce identical bytes") {
    const std::vector<std::vector<std::string>> cases = {
        {"tails", "--ds", "2", "--de", "6", "--format", "csv"},
        {"series", "--da", "2", "--db", "2", "--de", "4", "--format", "json"},
        {"mc", "--mode", "subsystem", "--ds", "2", "--de", "3", "--samples", "2048",
         "--seed", "999", "--workers", "2", "--format", "csv"},
    };
    for (const auto& args : cases) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("sampling output does not depend on the worker count") {
    const CliRun w1 = run({"mc", "--mode", "subsystem", "--ds", "2", "--de", "3",
                           "--samples", "2048", "--seed", "999", "--workers", "1",
                           "--format", "csv"});
    const CliRun w3 = run({"mc", "--mode", "subsystem", "--ds", "2", "--de", "3",
                           "--samples", "2048", "--seed", "999", "--workers", "3",
                           "--format", "csv"});
    CHECK(w1.code == 0);
    CHECK(w1.out == w3.out);
}

TEST_CASE("json envelope carries command, inputs, outputs, and version") {
    const CliRun r = run({"mi", "--da", "2", "--db", "2", "--de", "4", "--format", "json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("command") == "mi");
    CHECK(doc.at("version") == "0.1.0");
    CHECK(doc.at("inputs").at("d_a") == 2);
    CHECK(doc.at("inputs").at("d_e") == 4);
    const double total = doc.at("outputs").at("total").get<double>();
    CHECK(total == typicality::mi_exact({2, 2, 4}).total);
    const double leading = doc.at("outputs").at("leading").get<double>();
    CHECK(leading == 0.28125);
}

TEST_CASE("environment variable sets the default seed") {
    setenv("TYPICALITY_SEED", "777", 1);
    const CliRun r = run({"mc", "--mode", "subsystem", "--ds", "2", "--de", "2",
                          "--samples", "1024", "--format", "json"});
    unsetenv("TYPICALITY_SEED");
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("inputs").at("seed") == 777);
    // Explicit --seed wins over the environment.
    setenv("TYPICALITY_SEED", "777", 1);
    const CliRun explicit_seed = run({"mc", "--mode", "subsystem", "--ds", "2", "--de", "2",
                                      "--samples", "1024", "--seed", "31", "--format", "json"});
    unsetenv("TYPICALITY_SEED");
    CHECK(json::parse(explicit_seed.out).at("inputs").at("seed") == 31);
}

TEST_CASE("precision trims table and csv cells but not json values") {
    const CliRun coarse = run({"tails", "--ds", "2", "--de", "6", "--threshold", "0.5",
                               "--format", "csv", "--precision", "3"});
    CHECK(coarse.code == 0);
    // Beta(6,6) density at 1/2 is 693/256 = 2.70703125.
    CHECK(coarse.out.find("0.5,2.71,") != std::string::npos);
    const CliRun fine = run({"tails", "--ds", "2", "--de", "6", "--threshold", "0.5",
                             "--format", "csv", "--precision", "12"});
    CHECK(fine.out.find("0.5,2.70703125,") != std::string::npos);

    const CliRun as_json = run({"tails", "--ds", "2", "--de", "6", "--threshold", "0.5",
                                "--format", "json", "--precision", "3"});
    const json doc = json::parse(as_json.out);
    const double density = doc.at("outputs").at("rows").at(0).at("exact_density").get<double>();
    CHECK(density == typicality::pk_density({2, 6}, 0.5));  // full precision round-trip
}

TEST_CASE("output file receives exactly the stdout bytes") {
    const std::vector<std::string> base = {"tails", "--ds", "2", "--de", "6", "--format", "csv"};
    const CliRun direct = run(base);
    const fs::path path = fs::temp_directory_path() / "typicality_cli_out_test.csv";
    std::vector<std::string> to_file = base;
    to_file.push_back("--output");
    to_file.push_back(path.string());
    const CliRun filed = run(to_file);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.string().c_str());

    const CliRun bad = run({"tails", "--ds", "2", "--de", "6", "--output",
                            "/nonexistent-dir/impossible.csv"});
    CHECK(bad.code == 2);
}

TEST_CASE("table output has a header rule and footer notes") {
    const CliRun r = run({"tails", "--ds", "2", "--de", "6", "--threshold", "0.95"});
    CHECK(r.code == 0);
    const std::string header = first_line(r.out);
    CHECK(header.rfind("p ", 0) == 0);
    CHECK(header.find("exact_density") != std::string::npos);
    CHECK(header.find("gaussian_tail") != std::string::npos);
    // Second line is the dash rule.
    const std::string rest = r.out.substr(header.size() + 1);
    CHECK(first_line(rest).find("---") == 0);
    CHECK(r.out.find("# occupancy law Beta(6, 6)") != std::string::npos);
}
