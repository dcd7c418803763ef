#include "testgen/search/strategy.hpp"

namespace testgen::search {

namespace {

// Bounds memory on long runs; beyond it new sequences overwrite random ones.
constexpr std::size_t kMaxPool = 10'000;

}  // namespace

// Feedback-directed random generation: each new test extends a sequence that
// previously ran without error by one call. Erroring sequences are parked.
testcase::TestSuiteChromosome run_random(SearchContext& ctx)
{
    const auto& accessible = ctx.factory().cluster().accessible;
    std::vector<testcase::TestCase> good;
    std::vector<testcase::TestCase> errors;
    while (!ctx.should_stop()) {
        if (accessible.empty()) {
            ctx.finish_iteration();
            continue;
        }
        const std::size_t base = pick_index(ctx.rng(), good.size() + 1);
        testcase::TestCaseChromosome candidate;
        if (base < good.size()) candidate.test = good[base];
        const std::size_t callable = accessible[pick_index(ctx.rng(), accessible.size())];
        if (!ctx.factory().append_call(candidate.test, callable, ctx.rng())) {
            candidate.test = {};
            ctx.factory().append_call(candidate.test, callable, ctx.rng());
        }
        ctx.evaluate(candidate);
        auto& pool = candidate.result->ok() ? good : errors;
        if (pool.size() < kMaxPool) pool.push_back(std::move(candidate.test));
        else pool[pick_index(ctx.rng(), pool.size())] = std::move(candidate.test);
        ctx.finish_iteration();
    }
    return ctx.archive().solutions();
}

// Samples independent random tests into the archive until the budget is spent
// or every goal is covered.
testcase::TestSuiteChromosome run_random_testcase_search(SearchContext& ctx)
{
    while (!ctx.should_stop() && !ctx.all_covered()) {
        testcase::TestCaseChromosome test{ctx.factory().sample_random_test_case(ctx.rng()), nullptr};
        ctx.evaluate(test);
        ctx.finish_iteration();
    }
    return ctx.archive().solutions();
}

}  // namespace testgen::search
