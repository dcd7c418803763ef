#include "testgen/cli/pipeline.hpp"

#include <iostream>
#include <memory>
#include <random>

#include "testgen/assertgen/mutation.hpp"
#include "testgen/cli/statistics.hpp"
#include "testgen/fitness/fitness.hpp"
#include "testgen/lang/parser.hpp"
#include "testgen/search/strategy.hpp"

namespace testgen::cli {

namespace {

class ProgressPrinter final : public search::SearchObserver {
public:
    explicit ProgressPrinter(std::ostream& os) : os_(os) {}
    void on_iteration(const search::IterationInfo& info) override
    {
        os_ << "iteration " << info.iteration << ": " << info.elapsed_seconds << "s, branch coverage "
            << info.branch_coverage << ", line coverage " << info.line_coverage << "\n";
    }

private:
    std::ostream& os_;
};

std::uint64_t fresh_seed()
{
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

}  // namespace

GenerationOutcome generate(const analysis::Project& project, const RunConfig& config, std::ostream* log)
{
    GenerationOutcome outcome;
    outcome.seed = config.seed.value_or(fresh_seed());
    outcome.warnings = project.warnings;
    Rng rng(outcome.seed);

    auto strategy = search::create_strategy(config.algorithm);
    auto program = std::make_shared<const interp::Program>(project.all_modules(), project.target->name);
    analysis::NoTypeInference no_inference;
    const analysis::TestCluster cluster = analysis::build_test_cluster(*program, config.use_annotations, &no_inference);
    outcome.warnings.insert(outcome.warnings.end(), cluster.warnings.begin(), cluster.warnings.end());
    outcome.warnings.insert(outcome.warnings.end(), program->warnings().begin(), program->warnings().end());
    const fitness::ModuleGoals goals = fitness::build_goals(*project.target);
    const interp::Executor executor(program, cluster, config.budget);

    std::unique_ptr<search::Clock> clock;
    if (config.logical_clock) clock = std::make_unique<search::LogicalClock>();
    else clock = std::make_unique<search::WallClock>();

    search::StoppingConditions stop;
    if (config.max_seconds > 0.0) stop.max_seconds = config.max_seconds;
    stop.max_iterations = config.max_iterations;
    stop.full_coverage = config.stop_at_full_coverage;

    search::SearchContext ctx(executor, goals, config.criterion, config.search, stop, *clock, rng);
    StatisticsRecorder recorder;
    ctx.add_observer(&recorder);
    ProgressPrinter printer(log ? *log : std::clog);
    if (log && config.verbosity >= 1) {
        for (const auto& w : outcome.warnings) *log << "warning: " << w << "\n";
        ctx.add_observer(&printer);
    }
    if (log && config.verbosity >= 2) ctx.set_execution_log(log);

    outcome.suite = strategy->generate_tests(ctx);
    for (auto& test : outcome.suite.tests) {
        if (!test.result) test.result = std::make_shared<const interp::ExecutionResult>(executor.execute(test.test));
    }
    outcome.rows = recorder.rows();
    outcome.summary.iteration = ctx.iteration();
    outcome.summary.elapsed_seconds = ctx.elapsed_seconds();
    outcome.summary.branch_coverage = search::suite_coverage(ctx.evaluator(), goals.branch_goals, outcome.suite);
    outcome.summary.line_coverage = search::suite_coverage(ctx.evaluator(), goals.line_goals, outcome.suite);

    if (config.generate_assertions) {
        const auto mutants = assertgen::generate_mutants(*project.target);
        assertgen::AssertionConfig assertion_config;
        assertion_config.budget = config.budget;
        outcome.assertions =
            assertgen::synthesize_assertions(outcome.suite, project, cluster, mutants, assertion_config);
        if (log && config.verbosity >= 1) {
            *log << "assertions: " << outcome.assertions->assertions << ", mutants killed "
                 << outcome.assertions->killed() << "/" << mutants.size() << "\n";
        }
    }
    outcome.rendered = exporter::render(outcome.suite, project.target->name, cluster);
    return outcome;
}

RunResult run(const RunConfig& config, std::ostream* log)
{
    RunResult result;
    const auto fail = [&](int code, std::string message) {
        result.exit_code = code;
        result.message = std::move(message);
        return result;
    };
    if (config.project_path.empty() || config.output_path.empty() || config.module_name.empty()) {
        return fail(kExitUsage, "--project-path, --module-name and --output-path are required");
    }
    if (!lang::is_valid_identifier(config.module_name)) {
        return fail(kExitUsage, "invalid module name '" + config.module_name + "'");
    }
    if (!search::strategy_registry().contains(config.algorithm)) {
        try {
            (void)search::create_strategy(config.algorithm);
        } catch (const search::UnknownName& e) {
            return fail(kExitUsage, e.what());
        }
    }

    analysis::Project project;
    try {
        project = analysis::load_project(config.project_path, config.module_name);
    } catch (const lang::SyntaxError& e) {
        const auto path = config.project_path / (config.module_name + ".mdyn");
        return fail(kExitParse, path.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column())
                                    + ": " + e.message());
    } catch (const std::exception& e) {
        return fail(kExitIo, e.what());
    }

    result.outcome = generate(project, config, log);
    try {
        result.test_file = exporter::write_test_module(result.outcome->rendered, config.output_path);
        if (config.stats_path) {
            write_text_file(*config.stats_path, format_statistics(result.outcome->rows, result.outcome->summary));
            if (result.outcome->assertions) {
                write_text_file(kill_report_path(*config.stats_path),
                                format_kill_report(*result.outcome->assertions));
            }
        }
    } catch (const std::exception& e) {
        return fail(kExitIo, e.what());
    }
    if (log && config.verbosity >= 1) {
        *log << "wrote " << result.test_file.string() << " (" << result.outcome->suite.size()
             << " tests, branch coverage " << result.outcome->summary.branch_coverage << ")\n";
    }
    return result;
}

}  // namespace testgen::cli
