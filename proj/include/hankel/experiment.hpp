#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hankel {

/// One tolerance gate evaluated from persisted artifacts.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured numbers, human readable
};

struct ExperimentReport {
    std::string id;
    std::string kind;
    bool pass = false;
    bool error = false;
    std::string error_stage;  // named failing stage when error is set
    std::vector<CheckResult> checks;
    std::vector<std::string> artifacts;  // paths written
    double seconds = 0.0;
};

struct RunOptions {
    std::filesystem::path out_dir = "out";
    double refine = 1.0;        // multiplies discretization sizes
    std::optional<unsigned> seed;
    bool emit_plots = false;
};

/// Executes one experiment config (parsed JSON). Builds the operator, solves,
/// fits, gates against the configured law, and writes CSV/JSON artifacts plus
/// a Markdown summary. Errors are reported in the result with the failing
/// stage named; partial artifacts are retained.
ExperimentReport run_experiment(const nlohmann::json& config, const RunOptions& options);

ExperimentReport run_experiment_file(const std::filesystem::path& config_path,
                                     const RunOptions& options);

/// Runs every experiment listed in the manifest ({"experiments": [paths]},
/// relative to the manifest directory), continuing past failures. Writes an
/// aggregate report.md/report.json under options.out_dir.
std::vector<ExperimentReport> run_suite(const std::filesystem::path& manifest_path,
                                        const RunOptions& options);

/// Exit status: 0 iff every gate of every report passed.
int aggregate_status(const std::vector<ExperimentReport>& reports);

void write_aggregate_report(const std::filesystem::path& out_dir,
                            const std::vector<ExperimentReport>& reports);

}  // namespace hankel
