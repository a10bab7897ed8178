#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "typicality/haar_mc.hpp"
#include "typicality/mutual_information.hpp"
#include "typicality/pclt.hpp"
#include "typicality/quadrature.hpp"
#include "typicality/rational.hpp"
#include "typicality/report.hpp"
#include "typicality/special_functions.hpp"
#include "typicality/spectral.hpp"

namespace typicality::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct OutputSpec {
    std::string format = "table";
    int precision = 12;
    std::string path;
};

struct TableDoc {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt_double(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void write_table(std::ostream& os, const TableDoc& doc, const std::vector<std::string>& footer) {
    std::vector<std::size_t> width(doc.columns.size(), 0);
    for (std::size_t j = 0; j < doc.columns.size(); ++j) width[j] = doc.columns[j].size();
    for (const auto& row : doc.rows) {
        for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) os << "  ";
            os << cells[j];
            if (j + 1 < cells.size()) os << std::string(width[j] - cells[j].size(), ' ');
        }
        os << '\n';
    };
    line(doc.columns);
    std::vector<std::string> dashes;
    dashes.reserve(width.size());
    for (std::size_t w : width) dashes.emplace_back(w, '-');
    line(dashes);
    for (const auto& row : doc.rows) line(row);
    for (const auto& note : footer) os << "# " << note << '\n';
}

void write_csv(std::ostream& os, const TableDoc& doc) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j > 0) os << ',';
            os << csv_escape(cells[j]);
        }
        os << '\n';
    };
    line(doc.columns);
    for (const auto& row : doc.rows) line(row);
}

int emit(std::ostream& out, std::ostream& err, const OutputSpec& spec,
         const std::string& command, const json& inputs, const json& outputs,
         const TableDoc& doc, const std::vector<std::string>& footer = {}) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!spec.path.empty()) {
        file.open(spec.path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file " << spec.path << "\n";
            return 2;
        }
        os = &file;
    }
    if (spec.format == "json") {
        const json envelope = {
            {"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"version", kVersion}};
        *os << envelope.dump(2) << '\n';
    } else if (spec.format == "csv") {
        write_csv(*os, doc);
    } else {
        write_table(*os, doc, footer);
    }
    return 0;
}

void add_output_options(CLI::App* cmd, OutputSpec* spec) {
    cmd->add_option("--format", spec->format, "output format: table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--precision", spec->precision,
                    "significant digits for table and csv cells (3..17)")
        ->check(CLI::Range(3, 17));
    cmd->add_option("--output", spec->path, "write output to this file instead of stdout");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TYPICALITY_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && end != nullptr && *end == '\0') return v;
    }
    return 12345;
}

// ---------------------------------------------------------------- tails ---

struct TailsParams {
    int d_s = 2;
    int d_e = 1;
    int points = 22;
    double threshold = 0.0;
    bool threshold_given = false;
};

int cmd_tails(const TailsParams& p, const OutputSpec& spec, std::ostream& out,
              std::ostream& err) {
    const SubsystemDims dims{p.d_s, p.d_e};
    std::vector<DensityGridRow> rows;
    if (p.threshold_given) {
        const TailComparison t = tail_comparison(dims, p.threshold);
        rows.push_back({t.threshold, t.exact_density, t.gaussian_density, t.exact_tail,
                        t.gaussian_tail});
    } else {
        rows = density_grid(dims, p.points);
    }

    TableDoc doc;
    doc.columns = {"p", "exact_density", "gaussian_density", "exact_tail", "gaussian_tail"};
    json json_rows = json::array();
    for (const DensityGridRow& r : rows) {
        doc.rows.push_back({fmt_double(r.p, spec.precision),
                            fmt_double(r.exact_density, spec.precision),
                            fmt_double(r.gaussian_density, spec.precision),
                            fmt_double(r.exact_tail, spec.precision),
                            fmt_double(r.gaussian_tail, spec.precision)});
        json_rows.push_back({{"p", r.p},
                             {"exact_density", r.exact_density},
                             {"gaussian_density", r.gaussian_density},
                             {"exact_tail", r.exact_tail},
                             {"gaussian_tail", r.gaussian_tail}});
    }
    json inputs = {{"d_s", p.d_s}, {"d_e", p.d_e}};
    if (p.threshold_given) {
        inputs["threshold"] = p.threshold;
    } else {
        inputs["points"] = p.points;
    }
    const PkMoments m = pk_moments(dims);
    const json outputs = {{"rows", json_rows},
                          {"mean", m.mean},
                          {"variance", m.variance},
                          {"excess_kurtosis", m.excess_kurtosis}};
    return emit(out, err, spec, "tails", inputs, outputs, doc,
                {"occupancy law Beta(" + std::to_string(p.d_e) + ", " +
                 std::to_string(static_cast<long long>(p.d_e) * (p.d_s - 1)) + ")"});
}

// ------------------------------------------------------------------- mi ---

struct MiParams {
    int d_a = 2;
    int d_b = 2;
    int d_e = 4;
    std::string method = "exact";
    int k = -1;
    double tol = 1e-12;
};

int cmd_mi(const MiParams& p, const OutputSpec& spec, std::ostream& out, std::ostream& err) {
    const TripartiteDims dims{p.d_a, p.d_b, p.d_e};
    const bool in_regime = dims.page_regime();
    const json inputs = {{"d_a", p.d_a}, {"d_b", p.d_b}, {"d_e", p.d_e},
                         {"method", p.method}, {"k", p.k}, {"tol", p.tol}};

    TableDoc doc;
    doc.columns = {"quantity", "value"};
    json outputs;
    auto push = [&](const std::string& name, double value) {
        doc.rows.push_back({name, fmt_double(value, spec.precision)});
        outputs[name] = value;
    };

    const bool want_exact = p.method == "exact" || p.method == "all";
    const bool want_series = p.method == "series" || p.method == "all";
    const bool want_closed = p.method == "closed" || p.method == "all";

    MIDecomposition exact;
    if (want_exact || want_series || want_closed) exact = mi_exact(dims);

    if (want_exact) {
        push("diagonal_mi", exact.diagonal_mi);
        push("eigenvalue_correction", exact.eigenvalue_correction);
        push("total", exact.total);
        push("coherence_term", exact.coherence_term);
        push("cartan_term", exact.cartan_term);
        if (in_regime) {
            const double leading = mi_leading(dims);
            push("leading", leading);
            push("relative_suppression", (leading - exact.total) / leading);
        } else {
            push("naive_small_ab", mi_naive_factorized(dims));
            err << "note: d_a*d_b > d_e, reporting the swapped-regime exact value; the naive "
                   "small-AB formula gives "
                << fmt_double(mi_naive_factorized(dims), spec.precision) << "\n";
        }
    }

    if ((want_series || want_closed) && !in_regime) {
        if (p.method == "all") {
            // The exact part above still applies; flush it before failing.
            emit(out, err, spec, "mi", inputs, outputs, doc);
        }
        err << "error: series and closed-form evaluations require d_a*d_b <= d_e\n";
        return 3;
    }

    if (want_series) {
        const int order = p.k >= 0 ? p.k : optimal_truncation_order(dims, 64);
        const SeriesEvaluation s = mi_bernoulli_series(dims, order);
        push("series_order_k", static_cast<double>(s.order_k));
        push("series_value", s.value);
        push("series_truncation_estimate", s.truncation_estimate);
        if (p.method == "all") push("series_minus_exact", s.value - exact.total);
    }
    if (want_closed) {
        const QuadResult closed = mi_closed_form(dims, p.tol);
        push("closed_form_value", closed.value);
        push("closed_form_error_estimate", closed.abs_error_estimate);
        push("closed_form_evaluations", static_cast<double>(closed.evaluations));
        if (p.method == "all") push("closed_minus_exact", closed.value - exact.total);
    }
    return emit(out, err, spec, "mi", inputs, outputs, doc);
}

// --------------------------------------------------------------- series ---

struct SeriesParams {
    int d_a = 2;
    int d_b = 2;
    int d_e = 4;
    int k = -1;
};

int cmd_series(const SeriesParams& p, const OutputSpec& spec, std::ostream& out,
               std::ostream& err) {
    const TripartiteDims dims{p.d_a, p.d_b, p.d_e};
    const int optimal = optimal_truncation_order(dims, 64);
    const int order = p.k >= 0 ? p.k : optimal;
    const SeriesEvaluation s = mi_bernoulli_series(dims, order);
    const double exact_total = mi_exact(dims).total;

    TableDoc doc;
    doc.columns = {"k", "coefficient", "term", "cumulative"};
    json terms = json::array();
    double cumulative = to_double(s.leading_exact);
    doc.rows.push_back({"0", "-", fmt_double(cumulative, spec.precision),
                        fmt_double(cumulative, spec.precision)});
    terms.push_back({{"k", 0},
                     {"coefficient", nullptr},
                     {"term", cumulative},
                     {"cumulative", cumulative}});
    for (int k = 1; k <= s.order_k; ++k) {
        const double term = s.terms[k - 1];
        cumulative += term;
        const std::string coeff = to_string(s.coefficients[k - 1]);
        doc.rows.push_back({std::to_string(k), coeff, fmt_double(term, spec.precision),
                            fmt_double(cumulative, spec.precision)});
        terms.push_back(
            {{"k", k}, {"coefficient", coeff}, {"term", term}, {"cumulative", cumulative}});
    }

    const json inputs = {{"d_a", p.d_a}, {"d_b", p.d_b}, {"d_e", p.d_e}, {"k", p.k}};
    const json outputs = {{"terms", terms},
                          {"order_k", s.order_k},
                          {"optimal_k", optimal},
                          {"value", s.value},
                          {"truncation_estimate", s.truncation_estimate},
                          {"exact_total", exact_total},
                          {"series_minus_exact", s.value - exact_total}};
    const std::vector<std::string> footer = {
        "value " + fmt_double(s.value, spec.precision) + ", exact " +
            fmt_double(exact_total, spec.precision),
        "truncation estimate " + fmt_double(s.truncation_estimate, spec.precision) +
            ", optimal k* " + std::to_string(optimal)};
    return emit(out, err, spec, "series", inputs, outputs, doc, footer);
}

// ------------------------------------------------------------------- mc ---

struct McParams {
    std::string mode = "subsystem";
    int d_s = 0;
    int d_e = 0;
    int d_a = 0;
    int d_b = 0;
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0;
    int workers = 1;
    bool strict = false;
};

struct McRow {
    std::string quantity;
    double estimate = 0.0;
    double se = 0.0;
    bool has_se = true;
    double reference = 0.0;
    double z = 0.0;
};

int cmd_mc(const McParams& p, const OutputSpec& spec, std::ostream& out, std::ostream& err) {
    std::vector<McRow> rows;
    std::vector<std::string> strict_failures;
    json inputs = {{"mode", p.mode}, {"samples", p.samples}, {"seed", p.seed},
                   {"workers", p.workers}, {"strict", p.strict}};

    auto mean_row = [&](const std::string& name, const StreamingMoments& m, double ref,
                        double z_limit) {
        const double se = m.stderr_of_mean();
        const double z = se > 0.0 ? std::fabs(m.mean - ref) / se : 0.0;
        rows.push_back({name, m.mean, se, true, ref, z});
        if (z > z_limit) strict_failures.push_back(name);
    };

    if (p.mode == "subsystem" || p.mode == "bloch") {
        if (p.d_s <= 0 || p.d_e <= 0) {
            err << "error: --mode " << p.mode << " requires --ds and --de\n";
            return 2;
        }
        inputs["d_s"] = p.d_s;
        inputs["d_e"] = p.d_e;
        const SubsystemDims dims{p.d_s, p.d_e};
        const EnsembleStats stats = run_ensemble(dims, p.samples, p.seed, p.workers);

        if (p.mode == "subsystem") {
            mean_row("p1_mean", stats.pk[0], 1.0 / p.d_s, 4.0);
            mean_row("purity", stats.purity, lubkin_purity(dims).total, 4.0);
            const int d_small = std::min(p.d_s, p.d_e);
            const int d_large = std::max(p.d_s, p.d_e);
            mean_row("von_neumann", stats.von_neumann,
                     page_entropy(d_small, d_large).von_neumann, 4.0);
            mean_row("diagonal_entropy", stats.diagonal_entropy,
                     harmonic(dims.n()) - harmonic(p.d_e), 4.0);
            mean_row("plogp", stats.plogp, dirichlet_plogp(dims), 4.0);
            mean_row("cross_moment", stats.cross_moment,
                     to_double(dirichlet_cross_moment(dims.n())), 4.0);
            const double ks = ks_statistic(stats, dims);
            const double critical = 1.63 / std::sqrt(static_cast<double>(stats.count));
            rows.push_back({"ks_statistic", ks, 0.0, false, critical, ks / critical});
            if (ks >= critical) strict_failures.push_back("ks_statistic");
            const double violations = static_cast<double>(stats.majorization_violations);
            rows.push_back({"majorization_violations", violations, 0.0, false, 0.0, violations});
            if (violations > 0) strict_failures.push_back("majorization_violations");
        } else {
            const BlochVariancePrediction pred = bloch_variance_prediction(p.d_s, dims.n());
            double mean_cartan = 0.0, var_cartan = 0.0, mean_off = 0.0, var_off = 0.0;
            for (std::size_t a = 0; a < stats.bloch_sq.size(); ++a) {
                const bool cartan = a < static_cast<std::size_t>(pred.cartan_count);
                const std::string name =
                    (cartan ? "cartan_" + std::to_string(a + 1)
                            : "offdiag_" + std::to_string(a + 1 - pred.cartan_count));
                mean_row(name, stats.bloch_sq[a], pred.per_generator, 5.0);
                const double se = stats.bloch_sq[a].stderr_of_mean();
                if (cartan) {
                    mean_cartan += stats.bloch_sq[a].mean;
                    var_cartan += se * se;
                } else {
                    mean_off += stats.bloch_sq[a].mean;
                    var_off += se * se;
                }
            }
            mean_cartan /= pred.cartan_count;
            var_cartan /= static_cast<double>(pred.cartan_count) * pred.cartan_count;
            mean_off /= pred.offdiag_count;
            var_off /= static_cast<double>(pred.offdiag_count) * pred.offdiag_count;
            const double gap = mean_cartan - mean_off;
            const double gap_se = std::sqrt(var_cartan + var_off);
            const double gap_z = gap_se > 0.0 ? std::fabs(gap) / gap_se : 0.0;
            rows.push_back({"family_gap", gap, gap_se, true, 0.0, gap_z});
            if (gap_z > 5.0) strict_failures.push_back("family_gap");
        }
    } else if (p.mode == "mi") {
        if (p.d_a <= 0 || p.d_b <= 0 || p.d_e <= 0) {
            err << "error: --mode mi requires --da, --db, and --de\n";
            return 2;
        }
        inputs["d_a"] = p.d_a;
        inputs["d_b"] = p.d_b;
        inputs["d_e"] = p.d_e;
        const TripartiteDims dims{p.d_a, p.d_b, p.d_e};
        const MiEnsembleResult mc = mi_ensemble(dims, p.samples, p.seed, p.workers);
        const double ref = mi_exact(dims).total;
        const double se = mc.stderr_mean();
        const double z = se > 0.0 ? std::fabs(mc.mean() - ref) / se : 0.0;
        rows.push_back({"mi_mean", mc.mean(), se, true, ref, z});
        if (z > 4.0) strict_failures.push_back("mi_mean");
    } else {
        err << "error: unknown mc mode " << p.mode << "\n";
        return 2;
    }

    TableDoc doc;
    doc.columns = {"quantity", "estimate", "stderr", "reference", "z"};
    json json_rows = json::array();
    for (const McRow& r : rows) {
        doc.rows.push_back({r.quantity, fmt_double(r.estimate, spec.precision),
                            r.has_se ? fmt_double(r.se, spec.precision) : std::string(),
                            fmt_double(r.reference, spec.precision),
                            fmt_double(r.z, spec.precision)});
        json jr = {{"quantity", r.quantity}, {"estimate", r.estimate},
                   {"reference", r.reference}, {"z", r.z}};
        jr["stderr"] = r.has_se ? json(r.se) : json(nullptr);
        json_rows.push_back(jr);
    }
    json strict_json = json::array();
    for (const std::string& name : strict_failures) strict_json.push_back(name);
    const json outputs = {{"rows", json_rows}, {"strict_failures", strict_json}};
    const int rc = emit(out, err, spec, "mc", inputs, outputs, doc);
    if (rc != 0) return rc;
    if (p.strict && !strict_failures.empty()) {
        err << "strict: " << strict_failures.size() << " quantity(ies) out of tolerance\n";
        return 4;
    }
    return 0;
}

// --------------------------------------------------------------- report ---

struct ReportParams {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    int workers = 4;
    bool json_flag = false;
    bool inject_bernoulli_error = false;
    std::string cli_path;
};

std::string self_executable() {
    std::error_code ec;
    const std::filesystem::path p = std::filesystem::read_symlink("/proc/self/exe", ec);
    return ec ? std::string() : p.string();
}

int cmd_report(const ReportParams& p, OutputSpec spec, std::ostream& out, std::ostream& err) {
    if (p.json_flag) spec.format = "json";
    ReportOptions options;
    options.seed = p.seed;
    options.workers = p.workers;
    options.mc_samples = p.samples;
    options.inject_bernoulli_error = p.inject_bernoulli_error;
    options.cli_path = p.cli_path.empty() ? self_executable() : p.cli_path;
    const std::vector<CriterionResult> results = run_acceptance_battery(options);

    TableDoc doc;
    doc.columns = {"status", "id", "name", "seconds", "detail"};
    json criteria = json::array();
    int passed = 0;
    for (const CriterionResult& r : results) {
        passed += r.pass ? 1 : 0;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        doc.rows.push_back({r.pass ? "PASS" : "FAIL", std::to_string(r.id), r.name, secs,
                            r.detail});
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                            {"seconds", r.seconds}, {"detail", r.detail}});
    }
    const bool ok = passed == static_cast<int>(results.size());
    const json inputs = {{"samples", p.samples}, {"seed", p.seed}, {"workers", p.workers},
                         {"inject_bernoulli_error", p.inject_bernoulli_error}};
    const json outputs = {{"criteria", criteria}, {"passed", passed},
                          {"total", results.size()}, {"all_passed", ok}};
    const std::string summary = "acceptance: " + std::to_string(passed) + "/" +
                                std::to_string(results.size()) + " criteria passed";
    const int rc = emit(out, err, spec, "report", inputs, outputs, doc, {summary});
    if (rc != 0) return rc;
    if (!ok) {
        err << summary << "\n";
        return 4;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-size statistics of subsystems of Haar-random pure states"};
    app.set_version_flag("--version", std::string("typicality ") + kVersion);
    app.require_subcommand(1);

    TailsParams tails;
    OutputSpec tails_spec;
    CLI::App* tails_cmd =
        app.add_subcommand("tails", "Exact vs matched-Gaussian occupancy density and tails");
    tails_cmd->add_option("--ds", tails.d_s, "subsystem dimension")->required();
    tails_cmd->add_option("--de", tails.d_e, "environment dimension")->required();
    tails_cmd->add_option("--points", tails.points, "grid points on [0, 1.05]")
        ->check(CLI::Range(2, 100000));
    CLI::Option* threshold_opt = tails_cmd->add_option(
        "--threshold", tails.threshold, "evaluate a single threshold in (0, 1] instead");
    add_output_options(tails_cmd, &tails_spec);

    MiParams mi;
    OutputSpec mi_spec;
    CLI::App* mi_cmd = app.add_subcommand(
        "mi", "Ensemble-averaged mutual information of two small blocks");
    mi_cmd->add_option("--da", mi.d_a, "block A dimension")->required();
    mi_cmd->add_option("--db", mi.d_b, "block B dimension")->required();
    mi_cmd->add_option("--de", mi.d_e, "environment dimension")->required();
    mi_cmd->add_option("--method", mi.method, "exact, series, closed, or all")
        ->check(CLI::IsMember({"exact", "series", "closed", "all"}));
    mi_cmd->add_option("--k", mi.k, "series order (default: optimal truncation)")
        ->check(CLI::Range(0, 64));
    mi_cmd->add_option("--tol", mi.tol, "closed-form quadrature tolerance");
    add_output_options(mi_cmd, &mi_spec);

    SeriesParams series;
    OutputSpec series_spec;
    CLI::App* series_cmd =
        app.add_subcommand("series", "Asymptotic series terms for the mutual information");
    series_cmd->add_option("--da", series.d_a, "block A dimension")->required();
    series_cmd->add_option("--db", series.d_b, "block B dimension")->required();
    series_cmd->add_option("--de", series.d_e, "environment dimension")->required();
    series_cmd->add_option("--k", series.k, "series order (default: optimal truncation)")
        ->check(CLI::Range(0, 64));
    add_output_options(series_cmd, &series_spec);

    McParams mc;
    OutputSpec mc_spec;
    mc.seed = default_seed();
    CLI::App* mc_cmd =
        app.add_subcommand("mc", "Monte Carlo ensembles checked against analytic references");
    mc_cmd->add_option("--mode", mc.mode, "subsystem, mi, or bloch")
        ->check(CLI::IsMember({"subsystem", "mi", "bloch"}));
    mc_cmd->add_option("--ds", mc.d_s, "subsystem dimension (subsystem, bloch)");
    mc_cmd->add_option("--de", mc.d_e, "environment dimension");
    mc_cmd->add_option("--da", mc.d_a, "block A dimension (mi)");
    mc_cmd->add_option("--db", mc.d_b, "block B dimension (mi)");
    mc_cmd->add_option("--samples", mc.samples, "sample count")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    mc_cmd->add_option("--seed", mc.seed, "RNG seed (default: TYPICALITY_SEED or 12345)");
    mc_cmd->add_option("--workers", mc.workers, "worker threads (result-invariant)")
        ->check(CLI::Range(1, 256));
    mc_cmd->add_flag("--strict", mc.strict, "exit 4 when any check is out of tolerance");
    add_output_options(mc_cmd, &mc_spec);

    ReportParams report;
    OutputSpec report_spec;
    report.seed = default_seed();
    CLI::App* report_cmd = app.add_subcommand("report", "Run the full acceptance battery");
    report_cmd->add_option("--samples", report.samples, "Monte Carlo samples per ensemble")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{10000000}));
    report_cmd->add_option("--seed", report.seed, "RNG seed (default: TYPICALITY_SEED or 12345)");
    report_cmd->add_option("--workers", report.workers, "worker threads")
        ->check(CLI::Range(1, 256));
    report_cmd->add_flag("--json", report.json_flag, "shorthand for --format json");
    report_cmd->add_option("--cli", report.cli_path,
                           "executable used by the output-determinism criterion");
    report_cmd->add_flag("--inject-bernoulli-error", report.inject_bernoulli_error)
        ->group("");  // negative-control hook, hidden from help
    add_output_options(report_cmd, &report_spec);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    tails.threshold_given = threshold_opt->count() > 0;

    try {
        if (app.got_subcommand(tails_cmd)) return cmd_tails(tails, tails_spec, out, err);
        if (app.got_subcommand(mi_cmd)) return cmd_mi(mi, mi_spec, out, err);
        if (app.got_subcommand(series_cmd)) return cmd_series(series, series_spec, out, err);
        if (app.got_subcommand(mc_cmd)) return cmd_mc(mc, mc_spec, out, err);
        if (app.got_subcommand(report_cmd)) return cmd_report(report, report_spec, out, err);
    } catch (const RegimeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace typicality::cli
