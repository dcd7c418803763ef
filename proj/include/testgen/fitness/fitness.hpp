#pragma once

#include <vector>

#include "testgen/fitness/goals.hpp"
#include "testgen/interp/executor.hpp"
#include "testgen/interp/trace.hpp"

namespace testgen::fitness {

// d / (d + 1), kept strictly below 1 even where the quotient rounds up.
[[nodiscard]] double normalize(double distance);

// Fitness values are non-negative and 0 exactly when the goal is covered.
// Unreached branches cost one per unreached dependence level on top of the
// nearest reached ancestor's normalized distance.
class GoalEvaluator {
public:
    explicit GoalEvaluator(const ModuleGoals& goals) : goals_(&goals) {}

    [[nodiscard]] double fitness(const CoverageGoal& goal, const interp::ExecutionTrace& trace) const;
    [[nodiscard]] bool covered(const CoverageGoal& goal, const interp::ExecutionTrace& trace) const;
    [[nodiscard]] const ModuleGoals& goals() const { return *goals_; }

private:
    [[nodiscard]] double branch_fitness(const BranchGoal& goal, const std::string& callable,
                                        const interp::ExecutionTrace& trace) const;

    const ModuleGoals* goals_;
};

[[nodiscard]] double goal_fitness(const GoalEvaluator& evaluator, const CoverageGoal& goal,
                                  const interp::ExecutionResult& result);

// Σ over goals of the best fitness any result reaches.
[[nodiscard]] double suite_fitness(const GoalEvaluator& evaluator, const std::vector<CoverageGoal>& goals,
                                   const std::vector<const interp::ExecutionResult*>& results);

// Covered / total; 1.0 for an empty goal set.
[[nodiscard]] double coverage(const GoalEvaluator& evaluator, const std::vector<CoverageGoal>& goals,
                              const std::vector<const interp::ExecutionResult*>& results);

}  // namespace testgen::fitness
