#include <algorithm>

#include "testgen/search/ranking.hpp"
#include "testgen/search/strategy.hpp"

namespace testgen::search {

namespace {

class WholeSuiteSearch {
public:
    WholeSuiteSearch(SearchContext& ctx, bool use_archive) : ctx_(ctx), use_archive_(use_archive) {}

    testcase::TestSuiteChromosome run()
    {
        const auto& cfg = ctx_.config();
        const std::size_t n = std::max<std::size_t>(1, cfg.population_size);
        for (std::size_t i = 0; i < n; ++i) {
            testcase::TestSuiteChromosome suite;
            const std::size_t size = 1 + pick_index(ctx_.rng(), std::max<std::size_t>(1, cfg.initial_suite_max));
            for (std::size_t k = 0; k < size; ++k) add_random_test(suite);
            population_.push_back(std::move(suite));
        }
        evaluate_all();
        ctx_.finish_iteration(use_archive_ ? nullptr : &population_.front());
        while (!ctx_.should_stop()) {
            std::vector<testcase::TestSuiteChromosome> next;
            for (std::size_t e = 0; e < std::min(cfg.elitism, population_.size()); ++e) {
                next.push_back(population_[e]);
            }
            while (next.size() < n) {
                auto a = population_[rank_select()];
                auto b = population_[rank_select()];
                if (coin(ctx_.rng(), cfg.crossover_rate)) {
                    std::tie(a, b) = testcase::crossover(a, b, ctx_.rng());
                }
                mutate(a);
                mutate(b);
                next.push_back(std::move(a));
                if (next.size() < n) next.push_back(std::move(b));
            }
            population_ = std::move(next);
            evaluate_all();
            ctx_.finish_iteration(use_archive_ ? nullptr : &population_.front());
        }
        return use_archive_ ? ctx_.archive().solutions() : population_.front();
    }

private:
    void add_random_test(testcase::TestSuiteChromosome& suite)
    {
        suite.tests.push_back({ctx_.factory().sample_random_test_case(ctx_.rng()), nullptr});
        suite.changed();
    }

    // Each test mutates with probability 1/|suite|; then new tests are added
    // with geometrically decreasing probability.
    void mutate(testcase::TestSuiteChromosome& suite)
    {
        const auto& cfg = ctx_.config();
        const double p = suite.tests.empty() ? 0.0 : 1.0 / static_cast<double>(suite.tests.size());
        for (auto& t : suite.tests) {
            if (coin(ctx_.rng(), p)) {
                t.test = testcase::mutate(t.test, ctx_.factory(), ctx_.rng(), cfg.mutation);
                t.changed();
                suite.changed();
            }
        }
        double add = cfg.add_test_probability;
        while (suite.tests.size() < cfg.max_suite_size && coin(ctx_.rng(), add)) {
            add_random_test(suite);
            add *= cfg.add_test_probability;
        }
        const auto before = suite.tests.size();
        suite.tests.erase(std::remove_if(suite.tests.begin(), suite.tests.end(),
                                         [](const auto& t) { return t.test.empty(); }),
                          suite.tests.end());
        if (suite.tests.size() != before) suite.changed();
        if (suite.tests.empty()) add_random_test(suite);
    }

    void evaluate_all()
    {
        const auto goals = use_archive_ ? ctx_.uncovered_goals() : ctx_.goals();
        for (auto& suite : population_) {
            std::vector<const interp::ExecutionResult*> results;
            for (auto& t : suite.tests) {
                ctx_.evaluate(t);
                results.push_back(t.result.get());
            }
            if (use_archive_ || !suite.cached_fitness) {
                suite.cached_fitness = fitness::suite_fitness(ctx_.evaluator(), goals, results);
            }
        }
        std::stable_sort(population_.begin(), population_.end(), [](const auto& a, const auto& b) {
            if (*a.cached_fitness != *b.cached_fitness) return *a.cached_fitness < *b.cached_fitness;
            return a.total_length() < b.total_length();
        });
    }

    std::size_t rank_select()
    {
        const double r = std::uniform_real_distribution<double>(0.0, 1.0)(ctx_.rng());
        return rank_index(ctx_.config().rank_bias, population_.size(), r);
    }

    SearchContext& ctx_;
    bool use_archive_;
    std::vector<testcase::TestSuiteChromosome> population_;
};

}  // namespace

// Evolves whole suites against the summed per-goal fitness. With the archive,
// covered goals leave the objective and their tests are kept aside.
testcase::TestSuiteChromosome run_whole_suite(SearchContext& ctx, bool use_archive)
{
    return WholeSuiteSearch(ctx, use_archive).run();
}

}  // namespace testgen::search
