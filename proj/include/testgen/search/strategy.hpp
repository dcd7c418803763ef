#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "testgen/search/context.hpp"
#include "testgen/testcase/chromosome.hpp"

namespace testgen::search {

class GenerationStrategy {
public:
    virtual ~GenerationStrategy() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    // Runs until ctx.should_stop() and returns the final suite. The returned
    // tests carry their execution results.
    virtual testcase::TestSuiteChromosome generate_tests(SearchContext& ctx) = 0;
};

using StrategyFactory = std::function<std::unique_ptr<GenerationStrategy>()>;

class DuplicateName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class StrategyRegistry {
public:
    void register_strategy(const std::string& name, StrategyFactory factory);
    [[nodiscard]] std::unique_ptr<GenerationStrategy> create(const std::string& name) const;
    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] bool contains(const std::string& name) const { return factories_.count(name) > 0; }

private:
    std::map<std::string, StrategyFactory> factories_;
};

// Process-wide registry, pre-populated with the built-in algorithms.
[[nodiscard]] StrategyRegistry& strategy_registry();

void register_strategy(const std::string& name, StrategyFactory factory);
[[nodiscard]] std::unique_ptr<GenerationStrategy> create_strategy(const std::string& name);

inline constexpr const char* kBuiltinAlgorithms[] = {
    "RANDOM", "RANDOM_TEST_CASE_SEARCH", "MOSA", "DYNAMOSA", "MIO", "WHOLE_SUITE", "WHOLE_SUITE_ARCHIVE",
};
inline constexpr const char* kDefaultAlgorithm = "DYNAMOSA";

// The built-in algorithms as plain functions.
testcase::TestSuiteChromosome run_random(SearchContext& ctx);
testcase::TestSuiteChromosome run_random_testcase_search(SearchContext& ctx);
testcase::TestSuiteChromosome run_mosa(SearchContext& ctx);
testcase::TestSuiteChromosome run_dynamosa(SearchContext& ctx);
testcase::TestSuiteChromosome run_mio(SearchContext& ctx);
testcase::TestSuiteChromosome run_whole_suite(SearchContext& ctx, bool use_archive);

}  // namespace testgen::search
