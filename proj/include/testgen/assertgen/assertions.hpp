#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "testgen/analysis/cluster.hpp"
#include "testgen/assertgen/assertion.hpp"
#include "testgen/assertgen/mutation.hpp"
#include "testgen/interp/executor.hpp"
#include "testgen/testcase/chromosome.hpp"

namespace testgen::assertgen {

// Indices into `original` of observations the mutant run does not reproduce:
// a differing or missing value, or anything at or after the statement where
// the mutant run stopped early.
[[nodiscard]] std::vector<std::size_t> diff_observations(const interp::ExecutionResult& original,
                                                         const interp::ExecutionResult& mutant);

// The assertion checking `observation`, or nothing if its value cannot be
// written as a literal.
[[nodiscard]] std::optional<Assertion> assertion_for(const interp::Observation& observation);

struct KillRecord {
    std::size_t mutant_id = 0;
    MutationOperator op = MutationOperator::AOR;
    std::string description;
    std::optional<std::size_t> killed_by;  // index of the first killing test
};

// Which mutant an emitted assertion was synthesized from.
struct AssertionOrigin {
    std::size_t test = 0;
    std::size_t assertion = 0;  // index within the test's assertions
    std::size_t mutant_id = 0;
};

struct AssertionReport {
    std::vector<KillRecord> kills;
    std::vector<AssertionOrigin> origins;
    std::size_t assertions = 0;
    std::size_t skipped_tests = 0;  // erroring on the original module
    bool incomplete = false;        // step allowance ran out

    [[nodiscard]] std::size_t killed() const;
};

struct AssertionConfig {
    interp::Budget budget;
    std::uint64_t max_total_steps = 0;  // across all executions; 0 = unlimited
};

// Runs every test on the original and on each mutant and attaches, per
// distinguishable mutant, one assertion at the first observation point where
// the runs differ. Expected values come from the original run.
AssertionReport synthesize_assertions(testcase::TestSuiteChromosome& suite, const analysis::Project& project,
                                      const analysis::TestCluster& cluster, const std::vector<Mutant>& mutants,
                                      const AssertionConfig& config = {});

}  // namespace testgen::assertgen
