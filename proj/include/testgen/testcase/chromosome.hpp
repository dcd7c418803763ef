#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "testgen/interp/executor.hpp"
#include "testgen/testcase/test_case.hpp"

namespace testgen::testcase {

// A test case plus its last execution result; `result` is null when stale.
struct TestCaseChromosome {
    TestCase test;
    std::shared_ptr<const interp::ExecutionResult> result;

    void changed() { result.reset(); }
};

struct TestSuiteChromosome {
    std::vector<TestCaseChromosome> tests;
    // Suite fitness under the fitness function of the current run.
    std::optional<double> cached_fitness;

    void changed() { cached_fitness.reset(); }
    [[nodiscard]] std::size_t size() const { return tests.size(); }
    [[nodiscard]] std::size_t total_length() const;
};

inline std::size_t TestSuiteChromosome::total_length() const
{
    std::size_t n = 0;
    for (const auto& t : tests) n += t.test.size();
    return n;
}

}  // namespace testgen::testcase
