#include <algorithm>
#include <limits>
#include <numeric>

#include "testgen/search/ranking.hpp"
#include "testgen/search/strategy.hpp"

namespace testgen::search {

namespace {

struct Individual {
    testcase::TestCaseChromosome chromosome;
    std::size_t rank = 0;
    double crowding = 0.0;
};

class ManyObjectiveSearch {
public:
    ManyObjectiveSearch(SearchContext& ctx, bool dynamic) : ctx_(ctx), dynamic_(dynamic) {}

    testcase::TestSuiteChromosome run()
    {
        const std::size_t n = std::max<std::size_t>(1, ctx_.config().population_size);
        for (std::size_t i = 0; i < n; ++i) {
            Individual ind;
            ind.chromosome.test = ctx_.factory().sample_random_test_case(ctx_.rng());
            ctx_.evaluate(ind.chromosome);
            population_.push_back(std::move(ind));
        }
        population_ = select(std::move(population_), n);
        ctx_.finish_iteration();
        while (!ctx_.should_stop()) {
            std::vector<Individual> combined = breed(n);
            for (auto& ind : combined) ctx_.evaluate(ind.chromosome);
            for (auto& ind : population_) combined.push_back(std::move(ind));
            population_ = select(std::move(combined), n);
            ctx_.finish_iteration();
        }
        return ctx_.archive().solutions();
    }

private:
    std::vector<fitness::CoverageGoal> targets() const
    {
        const auto uncovered = ctx_.uncovered_goals();
        return dynamic_ ? dynamic_targets(ctx_.module_goals(), uncovered, ctx_.archive()) : uncovered;
    }

    const Individual& tournament()
    {
        const std::size_t rounds = std::max<std::size_t>(1, ctx_.config().tournament_size);
        const Individual* best = &population_[pick_index(ctx_.rng(), population_.size())];
        for (std::size_t r = 1; r < rounds; ++r) {
            const Individual* other = &population_[pick_index(ctx_.rng(), population_.size())];
            if (other->rank < best->rank || (other->rank == best->rank && other->crowding > best->crowding)) {
                best = other;
            }
        }
        return *best;
    }

    std::vector<Individual> breed(std::size_t n)
    {
        const auto& cfg = ctx_.config();
        std::vector<Individual> offspring;
        while (offspring.size() < n) {
            testcase::TestCase a = tournament().chromosome.test;
            testcase::TestCase b = tournament().chromosome.test;
            if (coin(ctx_.rng(), cfg.crossover_rate)) {
                std::tie(a, b) = testcase::crossover(a, b, ctx_.rng(), cfg.factory.max_length);
            }
            for (auto* child : {&a, &b}) {
                if (coin(ctx_.rng(), cfg.test_mutation_rate)) {
                    *child = testcase::mutate(*child, ctx_.factory(), ctx_.rng(), cfg.mutation);
                }
                if (offspring.size() < n) {
                    Individual ind;
                    ind.chromosome.test = std::move(*child);
                    offspring.push_back(std::move(ind));
                }
            }
        }
        return offspring;
    }

    // Preference sorting, then non-dominated fronts; the last admitted front
    // is cut by crowding distance.
    std::vector<Individual> select(std::vector<Individual> all, std::size_t n)
    {
        const auto goals = targets();
        std::vector<std::vector<double>> objectives;
        std::vector<std::size_t> lengths;
        for (const auto& ind : all) {
            std::vector<double> row;
            for (const auto& g : goals) row.push_back(ctx_.evaluator().fitness(g, ind.chromosome.result->trace));
            objectives.push_back(std::move(row));
            lengths.push_back(ind.chromosome.test.size());
        }
        auto fronts = preference_fronts(objectives, lengths, n);

        std::vector<Individual> next;
        for (std::size_t rank = 0; rank < fronts.size() && next.size() < n; ++rank) {
            auto& front = fronts[rank];
            const auto crowding = crowding_distances(objectives, front);
            for (std::size_t k = 0; k < front.size(); ++k) {
                all[front[k]].rank = rank;
                all[front[k]].crowding = crowding[k];
            }
            if (next.size() + front.size() > n) {
                std::stable_sort(front.begin(), front.end(),
                                 [&](std::size_t a, std::size_t b) { return all[a].crowding > all[b].crowding; });
                front.resize(n - next.size());
            }
            for (std::size_t i : front) next.push_back(std::move(all[i]));
        }
        return next;
    }

    SearchContext& ctx_;
    bool dynamic_;
    std::vector<Individual> population_;
};

}  // namespace

testcase::TestSuiteChromosome run_mosa(SearchContext& ctx)
{
    return ManyObjectiveSearch(ctx, false).run();
}

// MOSA over a moving target set: a goal becomes a target once the branch it is
// nested under has been covered.
testcase::TestSuiteChromosome run_dynamosa(SearchContext& ctx)
{
    return ManyObjectiveSearch(ctx, true).run();
}

}  // namespace testgen::search
