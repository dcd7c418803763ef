#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "testgen/cli/pipeline.hpp"
#include "testgen/search/strategy.hpp"

namespace {

std::string algorithm_list()
{
    std::string out;
    for (const auto& name : testgen::search::strategy_registry().names()) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace testgen;
    cli::RunConfig config;
    std::string coverage = "branch";
    bool no_annotations = false;
    bool no_assertions = false;
    bool keep_going = false;
    std::string stats;

    CLI::App app{"Search-based unit test generator for MiniDyn modules"};
    app.add_option("--project-path", config.project_path, "Directory holding the module and its dependencies")
        ->required();
    app.add_option("--module-name", config.module_name, "Module to generate tests for")->required();
    app.add_option("--output-path", config.output_path, "Directory for the generated test module")->required();
    app.add_option("--algorithm", config.algorithm, "One of: " + algorithm_list())
        ->default_val(search::kDefaultAlgorithm);
    app.add_option("--seed", config.seed, "RNG seed (random when omitted)");
    app.add_option("--maximum-search-time", config.max_seconds, "Search budget in seconds")->default_val(60.0);
    app.add_option("--maximum-iterations", config.max_iterations, "Stop after this many iterations");
    app.add_option("--coverage", coverage, "Coverage criterion")
        ->check(CLI::IsMember({"branch", "line", "both"}))
        ->default_val("branch");
    app.add_flag("--no-type-annotations", no_annotations, "Ignore type annotations");
    app.add_flag("--no-assertions", no_assertions, "Skip regression assertion generation");
    app.add_flag("--no-full-coverage-stop", keep_going, "Keep searching after every goal is covered");
    app.add_option("--stats-path", stats, "Write per-iteration coverage CSV here");
    app.add_flag("-v,--verbose", config.verbosity, "Progress output (-vv for every execution)");
    app.add_flag("--logical-clock", config.logical_clock,
                 "Measure time in interpreter steps, making runs reproducible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "valid algorithms: " << algorithm_list() << "\n";
        return cli::kExitUsage;
    }

    if (std::getenv(cli::kDangerVariable) == nullptr) {
        std::cerr << "refusing to run: the generator executes the module under test with random inputs.\n"
                  << "Set " << cli::kDangerVariable << " to any value to accept this.\n";
        return cli::kExitDangerUnset;
    }

    config.criterion = *fitness::parse_criterion(coverage);
    config.use_annotations = !no_annotations;
    config.generate_assertions = !no_assertions;
    config.stop_at_full_coverage = !keep_going;
    if (!stats.empty()) config.stats_path = stats;

    const auto result = cli::run(config, config.verbosity > 0 ? &std::cout : nullptr);
    if (result.exit_code != cli::kExitSuccess) {
        std::cerr << "error: " << result.message << "\n";
        if (result.exit_code == cli::kExitUsage) std::cerr << "valid algorithms: " << algorithm_list() << "\n";
    }
    return result.exit_code;
}
