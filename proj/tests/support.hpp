#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

#include "testgen/analysis/cluster.hpp"
#include "testgen/fitness/fitness.hpp"
#include "testgen/fitness/goals.hpp"
#include "testgen/interp/executor.hpp"
#include "testgen/lang/parser.hpp"
#include "testgen/search/context.hpp"
#include "testgen/search/strategy.hpp"

namespace testgen::testing {

inline std::filesystem::path corpus_dir() { return TESTGEN_CORPUS_DIR; }

inline std::shared_ptr<const lang::AstModule> parse_text(const std::string& text, const std::string& name = "m")
{
    return std::make_shared<const lang::AstModule>(lang::parse_module({name, name + ".mdyn", text}));
}

// A module ready for execution: project, linked program, cluster, goals, executor.
struct Subject {
    analysis::Project project;
    std::shared_ptr<const interp::Program> program;
    analysis::TestCluster cluster;
    fitness::ModuleGoals goals;
    std::unique_ptr<interp::Executor> executor;
    std::unique_ptr<fitness::GoalEvaluator> evaluator;

    Subject(analysis::Project p, bool annotations, interp::Budget budget = {})
        : project(std::move(p)),
          program(std::make_shared<const interp::Program>(project.all_modules(), project.target->name)),
          cluster(analysis::build_test_cluster(*program, annotations)),
          goals(fitness::build_goals(*project.target)),
          executor(std::make_unique<interp::Executor>(program, cluster, budget)),
          evaluator(std::make_unique<fitness::GoalEvaluator>(goals))
    {
    }
    Subject(const Subject&) = delete;
    Subject& operator=(const Subject&) = delete;

    [[nodiscard]] const lang::AstModule& module() const { return *project.target; }
    [[nodiscard]] std::string name() const { return project.target->name; }

    // Index of the callable with id "f", "Cls" or "Cls.m".
    [[nodiscard]] std::size_t callable(const std::string& id) const
    {
        for (std::size_t i = 0; i < cluster.callables.size(); ++i) {
            if (cluster.callables[i].id() == id) return i;
        }
        throw std::invalid_argument("no callable " + id);
    }
};

inline std::unique_ptr<Subject> from_text(const std::string& text, const std::string& name = "m",
                                          bool annotations = true, interp::Budget budget = {})
{
    return std::make_unique<Subject>(analysis::make_project(parse_text(text, name)), annotations, budget);
}

inline std::unique_ptr<Subject> from_corpus(const std::string& name, bool annotations = true,
                                            interp::Budget budget = {})
{
    return std::make_unique<Subject>(analysis::load_project(corpus_dir(), name), annotations, budget);
}

// Records every iteration report.
struct Recorder final : search::SearchObserver {
    std::vector<search::IterationInfo> infos;
    void on_iteration(const search::IterationInfo& info) override { infos.push_back(info); }
};

struct SearchRun {
    testcase::TestSuiteChromosome suite;
    std::vector<search::IterationInfo> infos;
    std::uint64_t iterations = 0;
    double elapsed = 0.0;
    double branch_coverage = 0.0;
    double line_coverage = 0.0;
};

inline SearchRun run_search(const Subject& s, const std::string& algorithm, search::StoppingConditions stop,
                            std::uint64_t seed, bool logical_clock = true,
                            fitness::Criterion criterion = fitness::Criterion::Both)
{
    Rng rng(seed);
    search::LogicalClock logical;
    search::WallClock wall;
    search::Clock& clock = logical_clock ? static_cast<search::Clock&>(logical) : wall;
    search::SearchContext ctx(*s.executor, s.goals, criterion, {}, stop, clock, rng);
    Recorder recorder;
    ctx.add_observer(&recorder);
    auto strategy = search::create_strategy(algorithm);
    SearchRun run;
    run.suite = strategy->generate_tests(ctx);
    for (auto& t : run.suite.tests) {
        if (!t.result) t.result = ctx.execute(t.test);
    }
    run.infos = std::move(recorder.infos);
    run.iterations = ctx.iteration();
    run.elapsed = ctx.elapsed_seconds();
    run.branch_coverage = search::suite_coverage(*s.evaluator, s.goals.branch_goals, run.suite);
    run.line_coverage = search::suite_coverage(*s.evaluator, s.goals.line_goals, run.suite);
    return run;
}

}  // namespace testgen::testing
