#include "testgen/search/strategy.hpp"

namespace testgen::search {

namespace {

class FunctionStrategy final : public GenerationStrategy {
public:
    using Run = testcase::TestSuiteChromosome (*)(SearchContext&);

    FunctionStrategy(std::string name, Run run) : name_(std::move(name)), run_(run) {}
    std::string name() const override { return name_; }
    testcase::TestSuiteChromosome generate_tests(SearchContext& ctx) override { return run_(ctx); }

private:
    std::string name_;
    Run run_;
};

testcase::TestSuiteChromosome whole_suite_plain(SearchContext& ctx)
{
    return run_whole_suite(ctx, false);
}

testcase::TestSuiteChromosome whole_suite_archive(SearchContext& ctx)
{
    return run_whole_suite(ctx, true);
}

void add_builtin(StrategyRegistry& registry, const std::string& name, FunctionStrategy::Run run)
{
    registry.register_strategy(name, [name, run] { return std::make_unique<FunctionStrategy>(name, run); });
}

}  // namespace

void StrategyRegistry::register_strategy(const std::string& name, StrategyFactory factory)
{
    if (!factories_.emplace(name, std::move(factory)).second) {
        throw DuplicateName("algorithm '" + name + "' is already registered");
    }
}

std::unique_ptr<GenerationStrategy> StrategyRegistry::create(const std::string& name) const
{
    auto it = factories_.find(name);
    if (it == factories_.end()) {
        std::string known;
        for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
        throw UnknownName("unknown algorithm '" + name + "'; valid algorithms: " + known);
    }
    return it->second();
}

std::vector<std::string> StrategyRegistry::names() const
{
    std::vector<std::string> out;
    for (const auto& entry : factories_) out.push_back(entry.first);
    return out;
}

StrategyRegistry& strategy_registry()
{
    static StrategyRegistry registry = [] {
        StrategyRegistry r;
        add_builtin(r, "RANDOM", run_random);
        add_builtin(r, "RANDOM_TEST_CASE_SEARCH", run_random_testcase_search);
        add_builtin(r, "MOSA", run_mosa);
        add_builtin(r, "DYNAMOSA", run_dynamosa);
        add_builtin(r, "MIO", run_mio);
        add_builtin(r, "WHOLE_SUITE", whole_suite_plain);
        add_builtin(r, "WHOLE_SUITE_ARCHIVE", whole_suite_archive);
        return r;
    }();
    return registry;
}

void register_strategy(const std::string& name, StrategyFactory factory)
{
    strategy_registry().register_strategy(name, std::move(factory));
}

std::unique_ptr<GenerationStrategy> create_strategy(const std::string& name)
{
    return strategy_registry().create(name);
}

}  // namespace testgen::search
