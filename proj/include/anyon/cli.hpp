#ifndef ANYON_CLI_HPP
#define ANYON_CLI_HPP

#include <string>
#include <vector>

#include "anyon/spectra.hpp"

namespace anyon {

/// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,
    exit_usage = 1,
    exit_validation = 2,
    exit_io = 3
};

/// Parsed command configuration. Axis values are already expanded from the
/// single-value or start:stop:step forms.
struct RunConfig {
    std::vector<Method> methods;
    std::vector<double> alphas;
    std::vector<double> b_fields;
    std::vector<int> n_r_values;
    std::vector<int> m_values;
    bool json_output = false;
    std::string out_path;        // empty = stdout
    int grid_points = 0;         // 0 = per-level default
    double r_max = 0.0;          // 0 = per-level default
    double energy_scale = 1.0;   // output conversion only
    unsigned threads = 0;        // 0 = hardware concurrency
};

/// One emitted line of a spectrum/sweep run.
struct ResultRow {
    Method method = Method::ebk;
    double alpha = 0.0;
    double b_field = 0.0;
    int n_r = 0;
    int m = 0;
    bool ok = false;
    double e_bar = 0.0;
    double e_total = 0.0;
    std::string error;
};

/// Expand "v" or "start:stop:step" into a value list (step > 0,
/// stop >= start). Throws std::invalid_argument on malformed input.
std::vector<double> parse_real_range(const std::string& text);
std::vector<int> parse_int_range(const std::string& text);

/// Evaluate the full (method x B x alpha x n_r x m) grid of config in
/// deterministic order; per-row failures land in ResultRow::error.
std::vector<ResultRow> evaluate_rows(const RunConfig& config);

std::string format_csv(const std::vector<ResultRow>& rows, double energy_scale);
std::string format_json(const std::vector<ResultRow>& rows, double energy_scale);

/// One check of the validation report.
struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "discrepancy-documented"
    std::vector<std::pair<std::string, double>> metrics;
    std::string note;
    bool passed = false;
};

/// Cross-checks of the closed forms against independent quadrature, of the
/// finite-difference solver against the weak-field closed form, of the
/// second-order root against the numeric EBK solve, and of the documented
/// factor-two residue discrepancy.
std::vector<CheckResult> run_validation();

std::string format_validation_report(const std::vector<CheckResult>& checks);

/// Entry point used by the binary; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace anyon

#endif
