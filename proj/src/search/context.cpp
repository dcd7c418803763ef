#include "testgen/search/context.hpp"

#include <algorithm>

namespace testgen::search {

namespace {

std::vector<fitness::CoverageGoal> tracked_goals(const fitness::ModuleGoals& goals)
{
    return goals.for_criterion(fitness::Criterion::Both);
}

double archive_coverage(const Archive& archive, const std::vector<fitness::CoverageGoal>& goals)
{
    if (goals.empty()) return 1.0;
    const auto hit = std::count_if(goals.begin(), goals.end(), [&](const auto& g) { return archive.covers(g); });
    return static_cast<double>(hit) / static_cast<double>(goals.size());
}

}  // namespace

double WallClock::elapsed_seconds() const
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

double LogicalClock::elapsed_seconds() const
{
    return static_cast<double>(steps_) / kStepsPerSecond;
}

SearchContext::SearchContext(const interp::Executor& executor, const fitness::ModuleGoals& goals,
                             fitness::Criterion criterion, SearchConfig config, StoppingConditions stop, Clock& clock,
                             Rng& rng)
    : executor_(executor), module_goals_(&goals), evaluator_(goals), goals_(goals.for_criterion(criterion)),
      config_(config), stop_(stop), clock_(clock), rng_(rng), factory_(executor.cluster(), config_.factory),
      archive_(evaluator_, tracked_goals(goals))
{
}

std::shared_ptr<const interp::ExecutionResult> SearchContext::execute(const testcase::TestCase& test)
{
    auto result = std::make_shared<const interp::ExecutionResult>(executor_.execute(test));
    clock_.charge(result->steps);
    ++executions_;
    if (execution_log_) {
        const auto failure = result->first_failure();
        *execution_log_ << "execution " << executions_ << ": " << test.size() << " statements, " << result->steps
                        << " steps, " << (failure ? "error at statement " + std::to_string(*failure) : "ok") << "\n";
    }
    return result;
}

void SearchContext::evaluate(testcase::TestCaseChromosome& chromosome)
{
    if (!chromosome.result) {
        chromosome.result = execute(chromosome.test);
    }
    archive_.update(chromosome.test, chromosome.result);
}

std::vector<fitness::CoverageGoal> SearchContext::uncovered_goals() const
{
    std::vector<fitness::CoverageGoal> out;
    for (const auto& g : goals_) {
        if (!archive_.covers(g)) out.push_back(g);
    }
    return out;
}

double SearchContext::progress() const
{
    double p = 0.0;
    if (stop_.max_seconds && *stop_.max_seconds > 0.0) {
        p = std::max(p, elapsed_seconds() / *stop_.max_seconds);
    }
    if (stop_.max_iterations && *stop_.max_iterations > 0) {
        p = std::max(p, static_cast<double>(iteration_) / static_cast<double>(*stop_.max_iterations));
    }
    return std::clamp(p, 0.0, 1.0);
}

void SearchContext::finish_iteration(const testcase::TestSuiteChromosome* solution)
{
    ++iteration_;
    IterationInfo info;
    info.iteration = iteration_;
    info.elapsed_seconds = elapsed_seconds();
    const auto& mg = *module_goals_;
    if (solution) {
        info.branch_coverage = suite_coverage(evaluator_, mg.branch_goals, *solution);
        info.line_coverage = suite_coverage(evaluator_, mg.line_goals, *solution);
        solution_covers_all_ = suite_coverage(evaluator_, goals_, *solution) >= 1.0;
        info.best_fitness = solution->cached_fitness;
    } else {
        info.branch_coverage = archive_coverage(archive_, mg.branch_goals);
        info.line_coverage = archive_coverage(archive_, mg.line_goals);
        solution_covers_all_ = all_covered();
    }
    last_ = info;
    for (auto* observer : observers_) {
        observer->on_iteration(info);
    }
}

bool SearchContext::should_stop() const
{
    if (stop_.max_iterations && iteration_ >= *stop_.max_iterations) return true;
    if (stop_.max_seconds && elapsed_seconds() >= *stop_.max_seconds) return true;
    return stop_.full_coverage && solution_covers_all_;
}

double suite_coverage(const fitness::GoalEvaluator& evaluator, const std::vector<fitness::CoverageGoal>& goals,
                      const testcase::TestSuiteChromosome& suite)
{
    std::vector<const interp::ExecutionResult*> results;
    for (const auto& t : suite.tests) {
        if (t.result) results.push_back(t.result.get());
    }
    return fitness::coverage(evaluator, goals, results);
}

}  // namespace testgen::search
