#include <gtest/gtest.h>

#include "support.hpp"
#include "testgen/corpus/corpus.hpp"
#include "testgen/random.hpp"
#include "testgen/testcase/factory.hpp"
#include "testgen/testcase/variation.hpp"

using namespace testgen;
namespace tgt = testgen::testing;
using namespace testgen::testcase;

namespace {

const char* kTwo = "def f(a: int) -> int:\n    return a\n\ndef g() -> int:\n    return 2\n";

const FunctionStatement* final_call(const TestCase& t)
{
    return t.empty() ? nullptr : std::get_if<FunctionStatement>(&t.statements.back());
}

TestSuiteChromosome suite_of(const std::vector<std::size_t>& lengths)
{
    TestSuiteChromosome s;
    for (auto n : lengths) {
        TestCaseChromosome c;
        for (std::size_t i = 0; i < n; ++i) c.test.statements.push_back(PrimitiveStatement{std::int64_t(n * 100 + i)});
        s.tests.push_back(c);
    }
    return s;
}

}  // namespace

TEST(Factory, TriangleTestEndsInCallWithIntArguments)
{
    auto s = tgt::from_corpus("triangle");
    TestFactory factory(s->cluster);
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const auto t = factory.sample_random_test_case(rng);
        ASSERT_EQ(validate(t, s->cluster), "");
        const auto* call = final_call(t);
        ASSERT_NE(call, nullptr);
        EXPECT_EQ(call->callable, s->callable("triangle"));
        ASSERT_GE(t.size(), 2u);
        ASSERT_LE(t.size(), 4u);
        for (std::size_t k = 0; k + 1 < t.size(); ++k) {
            const auto* p = std::get_if<PrimitiveStatement>(&t.statements[k]);
            ASSERT_NE(p, nullptr);
            const auto v = std::get<std::int64_t>(p->value);
            EXPECT_GE(v, -100);
            EXPECT_LE(v, 100);
        }
    }
}

TEST(Factory, NullaryCallableIsASingleStatement)
{
    auto s = tgt::from_text("def g() -> int:\n    return 2\n");
    TestFactory factory(s->cluster);
    Rng rng(1);
    const auto t = factory.sample_random_test_case(rng);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_NE(final_call(t), nullptr);
}

TEST(Factory, ClassParameterIsConstructed)
{
    auto s = tgt::from_corpus("geometry");
    TestFactory factory(s->cluster);
    Rng rng(9);
    TestCase t;
    ASSERT_TRUE(factory.append_call(t, s->callable("quadrant"), rng));
    ASSERT_EQ(validate(t, s->cluster), "");
    const auto& call = std::get<FunctionStatement>(t.statements.back());
    const auto* ctor = std::get_if<ConstructorStatement>(&t.statements[call.args.at(0)]);
    ASSERT_NE(ctor, nullptr);
    EXPECT_EQ(s->cluster.callables[ctor->callable].id(), "Point");
    EXPECT_EQ(ctor->args.size(), 2u);
}

TEST(Factory, ReusesExistingVariables)
{
    auto s = tgt::from_corpus("triangle");
    TestFactory factory(s->cluster);
    Rng rng(17);
    int shared = 0;
    for (int i = 0; i < 1000; ++i) shared += factory.sample_random_test_case(rng).size() < 4;
    // three int parameters, reuse probability 0.5 for the second and third
    EXPECT_GT(shared, 600);
    EXPECT_LT(shared, 900);
}

TEST(Factory, BoundaryIntsAppear)
{
    auto s = tgt::from_corpus("triangle");
    TestFactory factory(s->cluster);
    Rng rng(23);
    int boundary = 0;
    constexpr int kDraws = 20'000;
    for (int i = 0; i < kDraws; ++i) {
        const auto v = factory.random_int(rng);
        ASSERT_GE(v, -100);
        ASSERT_LE(v, 100);
        boundary += v >= -1 && v <= 1;
    }
    // 10% forced boundary plus 3/201 from the uniform part
    const double expected = kDraws * (0.1 + 0.9 * 3.0 / 201.0);
    EXPECT_NEAR(boundary, expected, 4.0 * std::sqrt(expected));
}

TEST(Factory, UniformCallableChoice)
{
    auto s = tgt::from_text(kTwo);
    TestFactory factory(s->cluster);
    Rng rng(31);
    constexpr int kDraws = 10'000;
    int f = 0;
    for (int i = 0; i < kDraws; ++i) f += final_call(factory.sample_random_test_case(rng))->callable == s->callable("f");
    const double sigma = std::sqrt(kDraws * 0.25);
    EXPECT_NEAR(f, kDraws / 2.0, 3.0 * sigma);
}

TEST(Factory, LengthCapOfOneOnlyAdmitsNullaryCalls)
{
    auto s = tgt::from_text(kTwo);
    FactoryConfig config;
    config.max_length = 1;
    TestFactory factory(s->cluster, config);
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto t = factory.sample_random_test_case(rng);
        ASSERT_LE(t.size(), 1u);
        if (!t.empty()) {
            EXPECT_EQ(final_call(t)->callable, s->callable("g"));
        }
    }
}

TEST(Factory, SameSeedSameTests)
{
    auto s = tgt::from_corpus("bank");
    TestFactory factory(s->cluster);
    Rng a(77);
    Rng b(77);
    for (int i = 0; i < 100; ++i) ASSERT_EQ(factory.sample_random_test_case(a), factory.sample_random_test_case(b));
}

TEST(Mutation, RandomOperatorsKeepTestsValid)
{
    Rng rng(4242);
    for (const auto& src : corpus::load_corpus(tgt::corpus_dir())) {
        auto s = tgt::from_corpus(src.name, coin(rng, 0.5));
        TestFactory factory(s->cluster);
        TestCase t = factory.sample_random_test_case(rng);
        for (int i = 0; i < 8'000; ++i) {
            const auto kind = static_cast<MutationKind>(pick_index(rng, 3));
            (void)apply_mutation(t, kind, factory, rng);
            ASSERT_EQ(validate(t, s->cluster), "") << src.name << " after op " << i;
            if (t.empty()) t = factory.sample_random_test_case(rng);
        }
    }
}

TEST(Mutation, ChangeMovesAnInt)
{
    auto s = tgt::from_corpus("triangle");
    TestFactory factory(s->cluster);
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        TestCase t;
        t.statements.push_back(PrimitiveStatement{std::int64_t{5}});
        ASSERT_TRUE(apply_mutation(t, MutationKind::Change, factory, rng));
        const auto v = std::get<std::int64_t>(std::get<PrimitiveStatement>(t.statements[0]).value);
        EXPECT_NE(v, 5);
        EXPECT_LE(std::abs(v - 5), 10);
    }
}

TEST(Mutation, ChangeCanSeparateSharedArguments)
{
    auto s = tgt::from_corpus("triangle");
    TestFactory factory(s->cluster);
    Rng rng(12);
    const auto tri = s->callable("triangle");
    bool separated = false;
    for (int i = 0; i < 200 && !separated; ++i) {
        TestCase t;
        t.statements.push_back(PrimitiveStatement{std::int64_t{5}});
        t.statements.push_back(FunctionStatement{tri, {0, 0, 0}});
        (void)apply_mutation(t, MutationKind::Change, factory, rng);
        ASSERT_EQ(validate(t, s->cluster), "");
        const auto& call = std::get<FunctionStatement>(t.statements.back());
        separated = call.args[0] != call.args[1] || call.args[1] != call.args[2];
    }
    EXPECT_TRUE(separated);
}

TEST(Mutation, InsertIntoFullTestFails)
{
    auto s = tgt::from_text(kTwo);
    FactoryConfig config;
    config.max_length = 3;
    TestFactory factory(s->cluster, config);
    Rng rng(3);
    TestCase t;
    for (int i = 0; i < 3; ++i) t.statements.push_back(FunctionStatement{s->callable("g"), {}});
    const TestCase before = t;
    EXPECT_FALSE(apply_mutation(t, MutationKind::Insert, factory, rng));
    EXPECT_EQ(t, before);
}

TEST(Mutation, RemovingAnArgumentRemovesItsUsers)
{
    auto s = tgt::from_text(kTwo);
    TestCase t;
    t.statements.push_back(PrimitiveStatement{std::int64_t{1}});
    t.statements.push_back(FunctionStatement{s->callable("f"), {0}});
    t.statements.push_back(FunctionStatement{s->callable("g"), {}});
    remove_with_dependents(t, 0);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(std::get<FunctionStatement>(t.statements[0]).callable, s->callable("g"));
}

TEST(Mutation, RemovingTheOnlyCallLeavesItsArgument)
{
    auto s = tgt::from_text(kTwo);
    TestCase t;
    t.statements.push_back(PrimitiveStatement{std::int64_t{1}});
    t.statements.push_back(FunctionStatement{s->callable("f"), {0}});
    remove_with_dependents(t, 1);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(validate(t, s->cluster), "");
}

TEST(Mutation, MutateChangesOrGivesUp)
{
    auto s = tgt::from_corpus("stack");
    TestFactory factory(s->cluster);
    Rng rng(19);
    int changed = 0;
    for (int i = 0; i < 500; ++i) {
        const auto t = factory.sample_random_test_case(rng);
        const auto m = mutate(t, factory, rng);
        ASSERT_EQ(validate(m, s->cluster), "");
        changed += m.statements != t.statements;
    }
    EXPECT_GT(changed, 490);
}

TEST(Crossover, TestCaseChildrenAreValid)
{
    auto s = tgt::from_corpus("bank");
    TestFactory factory(s->cluster);
    Rng rng(6);
    for (int i = 0; i < 1000; ++i) {
        TestCase a = factory.sample_random_test_case(rng);
        TestCase b = factory.sample_random_test_case(rng);
        for (int k = 0; k < 3; ++k) {
            a = mutate(a, factory, rng);
            b = mutate(b, factory, rng);
        }
        const auto [x, y] = crossover(a, b, rng);
        ASSERT_EQ(validate(x, s->cluster), "");
        ASSERT_EQ(validate(y, s->cluster), "");
    }
}

TEST(Crossover, SuiteWithItselfIsIdentity)
{
    const auto a = suite_of({1, 2, 3});
    for (std::size_t cut = 0; cut <= 3; ++cut) {
        const auto [x, y] = crossover_at(a, a, cut);
        ASSERT_EQ(x.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_EQ(x.tests[i].test, a.tests[i].test);
            EXPECT_EQ(y.tests[i].test, a.tests[i].test);
        }
    }
}

TEST(Crossover, SuiteCutZeroSwaps)
{
    const auto a = suite_of({1, 2});
    const auto b = suite_of({3, 4, 5});
    const auto [x, y] = crossover_at(a, b, 0);
    ASSERT_EQ(x.size(), 3u);
    ASSERT_EQ(y.size(), 2u);
    EXPECT_EQ(x.tests[0].test, b.tests[0].test);
    EXPECT_EQ(y.tests[1].test, a.tests[1].test);
}

TEST(Crossover, SuiteConservesTests)
{
    Rng rng(10);
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::size_t> la(pick_index(rng, 6));
        std::vector<std::size_t> lb(pick_index(rng, 6));
        for (auto& n : la) n = 1 + pick_index(rng, 5);
        for (auto& n : lb) n = 1 + pick_index(rng, 5);
        const auto a = suite_of(la);
        const auto b = suite_of(lb);
        const auto [x, y] = crossover(a, b, rng);
        ASSERT_EQ(x.size() + y.size(), a.size() + b.size());
        ASSERT_EQ(x.total_length() + y.total_length(), a.total_length() + b.total_length());
    }
}
