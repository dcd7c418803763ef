#include "testgen/search/archive.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace testgen::search {

Archive::Archive(const fitness::GoalEvaluator& evaluator, std::vector<fitness::CoverageGoal> goals)
    : evaluator_(&evaluator), goals_(std::move(goals))
{
}

bool Archive::update(const testcase::TestCase& test, const std::shared_ptr<const interp::ExecutionResult>& result)
{
    std::shared_ptr<const testcase::TestCaseChromosome> stored;
    bool changed = false;
    for (const auto& goal : goals_) {
        if (!evaluator_->covered(goal, result->trace)) continue;
        auto it = entries_.find(goal);
        if (it != entries_.end() && it->second.test->test.size() <= test.size()) continue;
        if (!stored) {
            testcase::TestCaseChromosome copy{test, result};
            copy.test.assertions.clear();
            stored = std::make_shared<const testcase::TestCaseChromosome>(std::move(copy));
        }
        entries_[goal] = Entry{stored};
        changed = true;
    }
    return changed;
}

bool Archive::covers(const fitness::CoverageGoal& goal) const
{
    return entries_.count(goal) > 0;
}

bool Archive::covers_all(const std::vector<fitness::CoverageGoal>& goals) const
{
    return std::all_of(goals.begin(), goals.end(), [&](const auto& g) { return covers(g); });
}

const testcase::TestCase* Archive::solution(const fitness::CoverageGoal& goal) const
{
    auto it = entries_.find(goal);
    if (it == entries_.end()) return nullptr;
    assert(evaluator_->covered(goal, it->second.test->result->trace));
    return &it->second.test->test;
}

testcase::TestSuiteChromosome Archive::solutions() const
{
    testcase::TestSuiteChromosome suite;
    std::set<const testcase::TestCaseChromosome*> seen;
    for (const auto& goal : goals_) {
        auto it = entries_.find(goal);
        if (it == entries_.end() || !seen.insert(it->second.test.get()).second) continue;
        suite.tests.push_back(*it->second.test);
    }
    return suite;
}

}  // namespace testgen::search
