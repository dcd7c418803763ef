#pragma once

#include <map>
#include <memory>
#include <vector>

#include "testgen/fitness/fitness.hpp"
#include "testgen/testcase/chromosome.hpp"

namespace testgen::search {

// Shortest known covering test per goal. Goals keep their construction order,
// which also orders the solution suite.
class Archive {
public:
    Archive(const fitness::GoalEvaluator& evaluator, std::vector<fitness::CoverageGoal> goals);

    // Offers an executed test; returns true if some goal gained a new or
    // strictly shorter covering test.
    bool update(const testcase::TestCase& test, const std::shared_ptr<const interp::ExecutionResult>& result);

    [[nodiscard]] bool covers(const fitness::CoverageGoal& goal) const;
    [[nodiscard]] bool covers_all(const std::vector<fitness::CoverageGoal>& goals) const;
    [[nodiscard]] std::size_t covered_count() const { return entries_.size(); }
    [[nodiscard]] const std::vector<fitness::CoverageGoal>& goals() const { return goals_; }
    [[nodiscard]] const testcase::TestCase* solution(const fitness::CoverageGoal& goal) const;

    // Distinct archived tests in goal order.
    [[nodiscard]] testcase::TestSuiteChromosome solutions() const;

private:
    struct Entry {
        std::shared_ptr<const testcase::TestCaseChromosome> test;
    };

    const fitness::GoalEvaluator* evaluator_;
    std::vector<fitness::CoverageGoal> goals_;
    std::map<fitness::CoverageGoal, Entry> entries_;
};

}  // namespace testgen::search
