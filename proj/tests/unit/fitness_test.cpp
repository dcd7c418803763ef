#include <gtest/gtest.h>

#include "support.hpp"
#include "testgen/corpus/corpus.hpp"
#include "testgen/lang/structure.hpp"
#include "testgen/random.hpp"
#include "testgen/testcase/factory.hpp"
#include "testgen/testcase/variation.hpp"

using namespace testgen;
namespace tgt = testgen::testing;
using fitness::BranchGoal;
using fitness::CoverageGoal;
using fitness::LineGoal;
using fitness::RootGoal;
using testcase::FunctionStatement;
using testcase::PrimitiveStatement;
using testcase::TestCase;

namespace {

const char* kTen = "def f(x: int) -> int:\n    if x == 10:\n        if x > 50:\n            return 2\n        return 1\n    return 0\n";

TestCase call_with_ints(std::size_t callable, const std::vector<std::int64_t>& args)
{
    TestCase t;
    FunctionStatement call{callable, {}};
    for (auto v : args) {
        call.args.push_back(t.size());
        t.statements.push_back(PrimitiveStatement{v});
    }
    t.statements.push_back(call);
    return t;
}

// Fitness recomputed from the definition: normalized distance when the
// predicate ran, else one per missing dependence level above the nearest
// reached ancestor (or the callable's entry).
double oracle(const fitness::ModuleGoals& goals, const CoverageGoal& goal, const interp::ExecutionTrace& trace)
{
    const auto entry = [&](const std::string& callable) { return trace.calls_entered.count(callable) ? 0.0 : 1.0; };
    std::function<double(const BranchGoal&)> branch = [&](const BranchGoal& b) -> double {
        auto it = trace.branch_results.find(b.predicate);
        if (it != trace.branch_results.end()) {
            const double d = b.polarity ? it->second.true_distance : it->second.false_distance;
            return d / (d + 1.0);
        }
        const auto& dep = goals.predicates.at(b.predicate);
        return 1.0 + (dep.parent ? branch(*dep.parent) : entry(dep.callable));
    };
    if (const auto* r = std::get_if<RootGoal>(&goal)) return entry(r->callable);
    if (const auto* b = std::get_if<BranchGoal>(&goal)) return branch(*b);
    const auto line = std::get<LineGoal>(goal).line;
    if (trace.lines_hit.count(line)) return 0.0;
    const auto& dep = goals.lines.at(line);
    return 1.0 + (dep.parent ? branch(*dep.parent) : entry(dep.callable));
}

std::vector<const interp::ExecutionResult*> pointers(const std::vector<interp::ExecutionResult>& results)
{
    std::vector<const interp::ExecutionResult*> out;
    for (const auto& r : results) out.push_back(&r);
    return out;
}

}  // namespace

TEST(Normalize, Examples)
{
    EXPECT_EQ(fitness::normalize(0.0), 0.0);
    EXPECT_DOUBLE_EQ(fitness::normalize(1.0), 0.5);
    EXPECT_DOUBLE_EQ(fitness::normalize(4.0), 0.8);
    EXPECT_LT(fitness::normalize(1e300), 1.0);
    EXPECT_LT(fitness::normalize(std::numeric_limits<double>::infinity()), 1.0);
}

TEST(Normalize, MonotoneAndBelowOne)
{
    Rng rng(1);
    for (int i = 0; i < 10'000; ++i) {
        const double a = std::uniform_real_distribution<double>(0.0, 1e6)(rng);
        const double b = a + std::uniform_real_distribution<double>(1e-3, 1e3)(rng);
        ASSERT_LE(fitness::normalize(a), fitness::normalize(b));
        ASSERT_LT(fitness::normalize(b), 1.0);
    }
}

TEST(GoalFitness, CoveredMissedAndUnreached)
{
    auto s = tgt::from_text(kTen);
    const auto preds = lang::collect_predicates(s->module());
    const auto hit = s->executor->execute(call_with_ints(s->callable("f"), {10}));
    const auto near = s->executor->execute(call_with_ints(s->callable("f"), {6}));
    EXPECT_EQ(s->evaluator->fitness(BranchGoal{preds[0], true}, hit.trace), 0.0);
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(BranchGoal{preds[0], true}, near.trace), 0.8);
    // inner predicate never ran: 1 + fitness of its parent
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(BranchGoal{preds[1], true}, near.trace), 1.8);
    EXPECT_GE(s->evaluator->fitness(BranchGoal{preds[1], false}, near.trace), 1.0);
    // nothing executed at all
    const interp::ExecutionTrace empty;
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(BranchGoal{preds[0], true}, empty), 2.0);
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(BranchGoal{preds[1], true}, empty), 3.0);
}

TEST(GoalFitness, LineGoals)
{
    auto s = tgt::from_text(kTen);
    const auto near = s->executor->execute(call_with_ints(s->callable("f"), {6}));
    EXPECT_EQ(s->evaluator->fitness(LineGoal{6}, near.trace), 0.0);
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(LineGoal{5}, near.trace), 1.8);
    EXPECT_DOUBLE_EQ(s->evaluator->fitness(LineGoal{2}, interp::ExecutionTrace{}), 2.0);
}

TEST(Goals, TriangleGoalSets)
{
    auto s = tgt::from_corpus("triangle");
    EXPECT_EQ(s->goals.branch_goals.size(), 4u);
    EXPECT_EQ(s->goals.line_goals.size(), 5u);
    EXPECT_EQ(s->goals.for_criterion(fitness::Criterion::Both).size(), 9u);
    const auto preds = lang::collect_predicates(s->module());
    // elif runs only when the if was false
    EXPECT_EQ(s->goals.parent(BranchGoal{preds[1], true}), (BranchGoal{preds[0], false}));
    EXPECT_FALSE(s->goals.parent(BranchGoal{preds[0], true}));
}

TEST(Goals, BranchlessCallablesGetRootGoals)
{
    auto s = tgt::from_corpus("area");
    ASSERT_EQ(s->goals.branch_goals.size(), 3u);
    for (const auto& g : s->goals.branch_goals) EXPECT_TRUE(std::holds_alternative<RootGoal>(g));
}

TEST(Goals, NestedDependenceChain)
{
    auto s = tgt::from_corpus("nesting");
    const auto preds = lang::collect_predicates(s->module());
    ASSERT_EQ(preds.size(), 7u);
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(s->goals.parent(BranchGoal{preds[i], true}), (BranchGoal{preds[i - 1], true}));
    }
    EXPECT_FALSE(s->goals.parent(BranchGoal{preds[4], false}));
}

TEST(Goals, ParseCriterion)
{
    EXPECT_EQ(fitness::parse_criterion("branch"), fitness::Criterion::Branch);
    EXPECT_EQ(fitness::parse_criterion("line"), fitness::Criterion::Line);
    EXPECT_EQ(fitness::parse_criterion("both"), fitness::Criterion::Both);
    EXPECT_FALSE(fitness::parse_criterion("mutation"));
}

TEST(GoalFitness, MatchesOracleOnRandomTests)
{
    Rng rng(99);
    for (const auto& src : corpus::load_corpus(tgt::corpus_dir())) {
        auto s = tgt::from_corpus(src.name);
        testcase::TestFactory factory(s->cluster);
        const auto goals = s->goals.for_criterion(fitness::Criterion::Both);
        for (int i = 0; i < 150; ++i) {
            auto test = factory.sample_random_test_case(rng);
            for (int k = pick_index(rng, 4); k > 0; --k) test = testcase::mutate(test, factory, rng);
            const auto r = s->executor->execute(test);
            for (const auto& g : goals) {
                const double f = s->evaluator->fitness(g, r.trace);
                ASSERT_NEAR(f, oracle(s->goals, g, r.trace), 1e-12) << src.name << " " << fitness::describe(g);
                ASSERT_GE(f, 0.0);
                ASSERT_EQ(f == 0.0, s->evaluator->covered(g, r.trace)) << src.name << " " << fitness::describe(g);
            }
        }
    }
}

TEST(GoalFitness, CoveredBranchRunsItsBody)
{
    Rng rng(5);
    for (const auto& name : {"triangle", "stack", "strings", "bank", "lists"}) {
        auto s = tgt::from_corpus(name);
        testcase::TestFactory factory(s->cluster);
        for (int i = 0; i < 200; ++i) {
            const auto r = s->executor->execute(factory.sample_random_test_case(rng));
            for (const auto& g : s->goals.branch_goals) {
                const auto* b = std::get_if<BranchGoal>(&g);
                if (!b || !b->polarity || !s->evaluator->covered(g, r.trace)) continue;
                bool body_line = false;
                for (const auto& [line, dep] : s->goals.lines) {
                    body_line |= dep.parent == *b && r.trace.lines_hit.count(line) > 0;
                }
                ASSERT_TRUE(body_line) << name << " " << fitness::describe(g);
            }
        }
    }
}

TEST(SuiteFitness, AddingATestNeverHurts)
{
    Rng rng(7);
    for (const auto& name : {"triangle", "nesting", "bank", "floats"}) {
        auto s = tgt::from_corpus(name);
        testcase::TestFactory factory(s->cluster);
        const auto goals = s->goals.for_criterion(fitness::Criterion::Both);
        for (int i = 0; i < 250; ++i) {
            std::vector<interp::ExecutionResult> results;
            const std::size_t n = pick_index(rng, 5);
            for (std::size_t k = 0; k < n; ++k) results.push_back(s->executor->execute(factory.sample_random_test_case(rng)));
            const double before = fitness::suite_fitness(*s->evaluator, goals, pointers(results));
            const double cov_before = fitness::coverage(*s->evaluator, goals, pointers(results));
            results.push_back(s->executor->execute(factory.sample_random_test_case(rng)));
            ASSERT_LE(fitness::suite_fitness(*s->evaluator, goals, pointers(results)), before);
            ASSERT_GE(fitness::coverage(*s->evaluator, goals, pointers(results)), cov_before);
        }
    }
}

TEST(Coverage, Examples)
{
    auto s = tgt::from_corpus("triangle");
    const auto tri = s->callable("triangle");
    const auto goals = s->goals.branch_goals;
    std::vector<interp::ExecutionResult> results;
    EXPECT_EQ(fitness::coverage(*s->evaluator, goals, pointers(results)), 0.0);
    results.push_back(s->executor->execute(call_with_ints(tri, {3, 3, 3})));
    EXPECT_DOUBLE_EQ(fitness::coverage(*s->evaluator, goals, pointers(results)), 0.25);
    results.push_back(s->executor->execute(call_with_ints(tri, {3, 3, 4})));
    results.push_back(s->executor->execute(call_with_ints(tri, {3, 4, 5})));
    EXPECT_DOUBLE_EQ(fitness::coverage(*s->evaluator, goals, pointers(results)), 1.0);
    EXPECT_EQ(fitness::suite_fitness(*s->evaluator, goals, pointers(results)), 0.0);
    EXPECT_EQ(fitness::coverage(*s->evaluator, {}, pointers(results)), 1.0);
}
