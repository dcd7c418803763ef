#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "testgen/analysis/cluster.hpp"
#include "testgen/interp/interpreter.hpp"
#include "testgen/interp/trace.hpp"
#include "testgen/testcase/test_case.hpp"

namespace testgen::interp {

struct Budget {
    std::uint64_t max_steps = 100'000;
};

enum class OutcomeStatus { Ok, RuntimeError, BudgetExhausted };

struct StatementOutcome {
    OutcomeStatus status = OutcomeStatus::Ok;
    ErrorKind error = ErrorKind::TypeError;  // meaningful for RuntimeError only
    std::string message;
};

struct ExecutionResult {
    ExecutionTrace trace;
    std::vector<StatementOutcome> outcomes;  // one per executed statement
    std::vector<std::string> value_types;    // runtime type per executed statement
    std::uint64_t steps = 0;

    [[nodiscard]] bool ok() const;
    // Index of the first failing statement, if any.
    [[nodiscard]] std::optional<std::size_t> first_failure() const;
};

// Runs test cases against a linked program. The cluster's callables are
// resolved once; an executor is immutable and reusable.
class Executor {
public:
    Executor(std::shared_ptr<const Program> program, const analysis::TestCluster& cluster, Budget budget = {});

    [[nodiscard]] ExecutionResult execute(const testcase::TestCase& test, bool observe = false) const;

    // Runs with a caller-supplied listener and no distance bookkeeping; used
    // for plain re-execution.
    [[nodiscard]] ExecutionResult execute_plain(const testcase::TestCase& test, ExecutionListener& listener) const;

    [[nodiscard]] const Program& program() const { return *program_; }
    [[nodiscard]] const analysis::TestCluster& cluster() const { return *cluster_; }
    [[nodiscard]] Budget budget() const { return budget_; }

private:
    ExecutionResult run(const testcase::TestCase& test, bool observe, ExecutionListener* listener,
                        bool distances) const;

    std::shared_ptr<const Program> program_;
    const analysis::TestCluster* cluster_;
    Budget budget_;
    std::vector<std::optional<Value>> resolved_;  // per cluster callable; methods stay empty
};

[[nodiscard]] ExecutionResult execute_test(const testcase::TestCase& test, std::shared_ptr<const Program> program,
                                           const analysis::TestCluster& cluster, Budget budget, bool observe);

}  // namespace testgen::interp
