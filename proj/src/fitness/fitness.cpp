#include "testgen/fitness/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace testgen::fitness {

double normalize(double distance)
{
    if (!(distance > 0.0)) return 0.0;
    static const double below_one = std::nextafter(1.0, 0.0);
    if (std::isinf(distance)) return below_one;
    return std::min(distance / (distance + 1.0), below_one);
}

double GoalEvaluator::branch_fitness(const BranchGoal& goal, const std::string& callable,
                                     const interp::ExecutionTrace& trace) const
{
    auto it = trace.branch_results.find(goal.predicate);
    if (it != trace.branch_results.end()) {
        return normalize(goal.polarity ? it->second.true_distance : it->second.false_distance);
    }
    auto dep = goals_->predicates.find(goal.predicate);
    if (dep != goals_->predicates.end() && dep->second.parent) {
        return 1.0 + branch_fitness(*dep->second.parent, callable, trace);
    }
    return 1.0 + (trace.calls_entered.count(callable) ? 0.0 : 1.0);
}

double GoalEvaluator::fitness(const CoverageGoal& goal, const interp::ExecutionTrace& trace) const
{
    if (const auto* root = std::get_if<RootGoal>(&goal)) {
        return trace.calls_entered.count(root->callable) ? 0.0 : 1.0;
    }
    if (const auto* branch = std::get_if<BranchGoal>(&goal)) {
        auto dep = goals_->predicates.find(branch->predicate);
        const std::string callable = dep == goals_->predicates.end() ? std::string() : dep->second.callable;
        return branch_fitness(*branch, callable, trace);
    }
    const auto& line = std::get<LineGoal>(goal);
    if (trace.lines_hit.count(line.line)) return 0.0;
    auto dep = goals_->lines.find(line.line);
    if (dep == goals_->lines.end()) return 2.0;
    if (dep->second.parent) {
        return 1.0 + branch_fitness(*dep->second.parent, dep->second.callable, trace);
    }
    return 1.0 + (trace.calls_entered.count(dep->second.callable) ? 0.0 : 1.0);
}

bool GoalEvaluator::covered(const CoverageGoal& goal, const interp::ExecutionTrace& trace) const
{
    if (const auto* root = std::get_if<RootGoal>(&goal)) return trace.calls_entered.count(root->callable) > 0;
    if (const auto* line = std::get_if<LineGoal>(&goal)) return trace.lines_hit.count(line->line) > 0;
    const auto& branch = std::get<BranchGoal>(goal);
    auto it = trace.branch_results.find(branch.predicate);
    if (it == trace.branch_results.end()) return false;
    return (branch.polarity ? it->second.true_distance : it->second.false_distance) == 0.0;
}

double goal_fitness(const GoalEvaluator& evaluator, const CoverageGoal& goal, const interp::ExecutionResult& result)
{
    return evaluator.fitness(goal, result.trace);
}

double suite_fitness(const GoalEvaluator& evaluator, const std::vector<CoverageGoal>& goals,
                     const std::vector<const interp::ExecutionResult*>& results)
{
    static const interp::ExecutionTrace empty;
    double total = 0.0;
    for (const auto& goal : goals) {
        double best = evaluator.fitness(goal, empty);
        for (const auto* r : results) {
            best = std::min(best, evaluator.fitness(goal, r->trace));
        }
        total += best;
    }
    return total;
}

double coverage(const GoalEvaluator& evaluator, const std::vector<CoverageGoal>& goals,
                const std::vector<const interp::ExecutionResult*>& results)
{
    if (goals.empty()) return 1.0;
    std::size_t hit = 0;
    for (const auto& goal : goals) {
        const bool any = std::any_of(results.begin(), results.end(),
                                     [&](const auto* r) { return evaluator.covered(goal, r->trace); });
        if (any) ++hit;
    }
    return static_cast<double>(hit) / static_cast<double>(goals.size());
}

}  // namespace testgen::fitness
