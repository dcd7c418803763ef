#include <algorithm>
#include <map>

#include "testgen/search/ranking.hpp"
#include "testgen/search/strategy.hpp"

namespace testgen::search {

namespace {

struct Sample {
    testcase::TestCaseChromosome chromosome;
    double fitness = 0.0;
};

struct Bucket {
    std::vector<Sample> samples;  // best first
    std::size_t counter = 0;      // samplings since the last improvement
};

}  // namespace

// Many Independent Objectives: one small population per uncovered goal. The
// random-sampling probability and the population cap shrink linearly until
// the focused phase, after which only the best test per goal is mutated.
testcase::TestSuiteChromosome run_mio(SearchContext& ctx)
{
    const auto& cfg = ctx.config();
    static const interp::ExecutionTrace nothing;
    std::map<fitness::CoverageGoal, Bucket> buckets;

    while (!ctx.should_stop()) {
        const auto [random_probability, cap] = mio_schedule(cfg, ctx.progress());

        Bucket* source = nullptr;
        for (const auto& goal : ctx.uncovered_goals()) {
            auto it = buckets.find(goal);
            if (it == buckets.end() || it->second.samples.empty()) continue;
            if (!source || it->second.counter < source->counter) source = &it->second;
        }

        testcase::TestCaseChromosome candidate;
        double source_best = 0.0;
        if (!source || coin(ctx.rng(), random_probability)) {
            source = nullptr;
            candidate.test = ctx.factory().sample_random_test_case(ctx.rng());
        } else {
            source_best = source->samples.front().fitness;
            const auto& parent = source->samples[pick_index(ctx.rng(), source->samples.size())];
            candidate.test = testcase::mutate(parent.chromosome.test, ctx.factory(), ctx.rng(), cfg.mutation);
        }
        ctx.evaluate(candidate);

        bool improved_source = false;
        for (const auto& goal : ctx.goals()) {
            auto& bucket = buckets[goal];
            if (ctx.archive().covers(goal)) {
                bucket.samples.clear();
                continue;
            }
            const double f = ctx.evaluator().fitness(goal, candidate.result->trace);
            if (f >= ctx.evaluator().fitness(goal, nothing)) continue;
            if (&bucket == source && f < source_best) improved_source = true;
            bucket.samples.push_back({candidate, f});
            std::stable_sort(bucket.samples.begin(), bucket.samples.end(), [](const Sample& a, const Sample& b) {
                return a.fitness < b.fitness
                       || (a.fitness == b.fitness && a.chromosome.test.size() < b.chromosome.test.size());
            });
        }
        for (auto& [goal, bucket] : buckets) {
            if (bucket.samples.size() > cap) bucket.samples.resize(cap);
        }
        if (source) {
            source->counter = improved_source ? 0 : source->counter + 1;
        }
        ctx.finish_iteration();
    }
    return ctx.archive().solutions();
}

}  // namespace testgen::search
