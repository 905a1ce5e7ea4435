#include <iostream>

#include <CLI11.hpp>

#include "hankel/experiment.hpp"

namespace {

void print_reports(const std::vector<hankel::ExperimentReport>& reports)
{
    for (const auto& r : reports) {
        std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.id << " (" << r.kind << ", "
                  << r.seconds << " s)\n";
        for (const auto& ch : r.checks)
            std::cout << "    " << (ch.pass ? "[pass] " : "[FAIL] ") << ch.name
                      << (ch.detail.empty() ? "" : "  -- " + ch.detail) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hankel operator spectra: experiments, comparisons, verification suites"};
    app.require_subcommand(1);

    hankel::RunOptions options;
    std::string out_dir = "out";
    double refine = 1.0;
    unsigned seed = 0;
    bool have_seed = false;
    bool emit_plots = false;
    app.add_option("--out", out_dir, "output directory for artifacts");
    app.add_option("--refine", refine, "multiply discretization sizes by this factor");
    app.add_option("--seed", seed, "override solver start-vector seed")->each([&](std::string) {
        have_seed = true;
    });
    app.add_flag("--emit-plots", emit_plots, "also write gnuplot-compatible .dat files");

    std::string config_path, manifest_path, compare_path;
    auto* run = app.add_subcommand("run", "run one experiment config");
    run->add_option("config", config_path, "experiment config (JSON)")->required();
    auto* compare = app.add_subcommand("compare", "run a representation-equivalence config");
    compare->add_option("config", compare_path, "comparison config (JSON)")->required();
    auto* suite = app.add_subcommand("suite", "run every experiment in a manifest");
    suite->add_option("manifest", manifest_path, "manifest (JSON with an 'experiments' list)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    options.out_dir = out_dir;
    options.refine = refine;
    options.emit_plots = emit_plots;
    if (have_seed) options.seed = seed;

    std::vector<hankel::ExperimentReport> reports;
    if (run->parsed()) {
        reports.push_back(hankel::run_experiment_file(config_path, options));
        hankel::write_aggregate_report(options.out_dir, reports);
    } else if (compare->parsed()) {
        auto r = hankel::run_experiment_file(compare_path, options);
        if (r.kind != "compare-representations") {
            std::cerr << "compare: config kind must be 'compare-representations'\n";
            return 2;
        }
        reports.push_back(std::move(r));
        hankel::write_aggregate_report(options.out_dir, reports);
    } else if (suite->parsed()) {
        reports = hankel::run_suite(manifest_path, options);
    }
    print_reports(reports);
    return hankel::aggregate_status(reports);
}
