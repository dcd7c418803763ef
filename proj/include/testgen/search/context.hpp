#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "testgen/fitness/fitness.hpp"
#include "testgen/interp/executor.hpp"
#include "testgen/random.hpp"
#include "testgen/search/archive.hpp"
#include "testgen/testcase/factory.hpp"
#include "testgen/testcase/variation.hpp"

namespace testgen::search {

struct SearchConfig {
    std::size_t population_size = 50;
    std::size_t tournament_size = 5;
    double crossover_rate = 0.75;
    double test_mutation_rate = 1.0;  // MOSA family: every offspring is mutated

    std::size_t mio_max_bucket = 10;
    double mio_initial_random_probability = 0.5;
    double mio_focus_start = 0.5;  // fraction of the budget

    double rank_bias = 1.7;
    std::size_t elitism = 1;
    std::size_t initial_suite_max = 10;
    std::size_t max_suite_size = 50;
    double add_test_probability = 1.0 / 3.0;

    testcase::FactoryConfig factory;
    testcase::MutationConfig mutation;
};

struct StoppingConditions {
    std::optional<double> max_seconds;
    std::optional<std::uint64_t> max_iterations;
    bool full_coverage = true;

    [[nodiscard]] bool any_active() const { return max_seconds || max_iterations || full_coverage; }
};

class Clock {
public:
    virtual ~Clock() = default;
    [[nodiscard]] virtual double elapsed_seconds() const = 0;
    // Called once per test execution with the interpreter steps it used.
    virtual void charge(std::uint64_t /*steps*/) {}
};

class WallClock final : public Clock {
public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double elapsed_seconds() const override;

private:
    std::chrono::steady_clock::time_point start_;
};

// Time derived from executed interpreter steps, for reproducible time budgets
// and timestamps.
class LogicalClock final : public Clock {
public:
    static constexpr double kStepsPerSecond = 1e6;
    static constexpr std::uint64_t kStepsPerExecution = 100;

    [[nodiscard]] double elapsed_seconds() const override;
    void charge(std::uint64_t steps) override { steps_ += steps + kStepsPerExecution; }

private:
    std::uint64_t steps_ = 0;
};

struct IterationInfo {
    std::uint64_t iteration = 0;
    double elapsed_seconds = 0.0;
    double branch_coverage = 0.0;
    double line_coverage = 0.0;
    std::optional<double> best_fitness;  // suite fitness, for suite-level searches
};

class SearchObserver {
public:
    virtual ~SearchObserver() = default;
    virtual void on_iteration(const IterationInfo& info) = 0;
};

// Everything a strategy may touch: operators, goals, the archive, budget
// bookkeeping and the injected generator.
class SearchContext {
public:
    SearchContext(const interp::Executor& executor, const fitness::ModuleGoals& goals, fitness::Criterion criterion,
                  SearchConfig config, StoppingConditions stop, Clock& clock, Rng& rng);

    void add_observer(SearchObserver* observer) { observers_.push_back(observer); }
    // Receives one line per test execution when set.
    void set_execution_log(std::ostream* log) { execution_log_ = log; }

    [[nodiscard]] std::shared_ptr<const interp::ExecutionResult> execute(const testcase::TestCase& test);
    // Executes a chromosome if stale and offers it to the archive.
    void evaluate(testcase::TestCaseChromosome& chromosome);

    [[nodiscard]] const testcase::TestFactory& factory() const { return factory_; }
    [[nodiscard]] const fitness::GoalEvaluator& evaluator() const { return evaluator_; }
    [[nodiscard]] const fitness::ModuleGoals& module_goals() const { return *module_goals_; }
    // Goals of the configured criterion, in construction order.
    [[nodiscard]] const std::vector<fitness::CoverageGoal>& goals() const { return goals_; }
    [[nodiscard]] std::vector<fitness::CoverageGoal> uncovered_goals() const;
    [[nodiscard]] Archive& archive() { return archive_; }
    [[nodiscard]] const Archive& archive() const { return archive_; }
    [[nodiscard]] const SearchConfig& config() const { return config_; }
    [[nodiscard]] const StoppingConditions& stopping() const { return stop_; }
    [[nodiscard]] Rng& rng() { return rng_; }
    [[nodiscard]] double elapsed_seconds() const { return clock_.elapsed_seconds(); }
    [[nodiscard]] std::uint64_t iteration() const { return iteration_; }
    [[nodiscard]] std::uint64_t executions() const { return executions_; }

    // Fraction of the budget used, in [0, 1]; 0 without time or iteration limits.
    [[nodiscard]] double progress() const;

    // Closes an iteration: bumps the counter and notifies observers with the
    // coverage of `solution` (the archive when null).
    void finish_iteration(const testcase::TestSuiteChromosome* solution = nullptr);
    [[nodiscard]] bool all_covered() const { return archive_.covers_all(goals_); }
    // Time/iteration limits reached, or (if enabled) every goal covered.
    [[nodiscard]] bool should_stop() const;

    [[nodiscard]] IterationInfo last_iteration() const { return last_; }

private:
    const interp::Executor& executor_;
    const fitness::ModuleGoals* module_goals_;
    fitness::GoalEvaluator evaluator_;
    std::vector<fitness::CoverageGoal> goals_;
    SearchConfig config_;
    StoppingConditions stop_;
    Clock& clock_;
    Rng& rng_;
    testcase::TestFactory factory_;
    Archive archive_;
    std::vector<SearchObserver*> observers_;
    std::ostream* execution_log_ = nullptr;
    std::uint64_t iteration_ = 0;
    std::uint64_t executions_ = 0;
    bool solution_covers_all_ = false;
    IterationInfo last_;
};

// Coverage of a set of results over the given goals.
[[nodiscard]] double suite_coverage(const fitness::GoalEvaluator& evaluator,
                                    const std::vector<fitness::CoverageGoal>& goals,
                                    const testcase::TestSuiteChromosome& suite);

}  // namespace testgen::search
