#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "testgen/random.hpp"

using namespace testgen;
namespace tgt = testgen::testing;
using analysis::CallableKind;

namespace {

std::size_t typed_params(const analysis::TestCluster& cluster)
{
    std::size_t n = 0;
    for (const auto& c : cluster.callables) {
        for (const auto& p : c.params) n += p.type.has_value();
    }
    return n;
}

}  // namespace

TEST(Cluster, TriangleWithAnnotations)
{
    auto s = tgt::from_corpus("triangle");
    ASSERT_EQ(s->cluster.accessible.size(), 1u);
    const auto& c = s->cluster.callables[s->cluster.accessible[0]];
    EXPECT_EQ(c.kind, CallableKind::Function);
    EXPECT_EQ(c.id(), "triangle");
    ASSERT_EQ(c.arity(), 3u);
    for (const auto& p : c.params) {
        ASSERT_TRUE(p.type);
        EXPECT_EQ(p.type->name, "int");
    }
    ASSERT_TRUE(c.return_type);
    EXPECT_EQ(c.return_type->name, "str");
}

TEST(Cluster, TriangleWithoutAnnotations)
{
    auto s = tgt::from_corpus("triangle", false);
    const auto& c = s->cluster.callables[s->cluster.accessible[0]];
    ASSERT_EQ(c.arity(), 3u);
    for (const auto& p : c.params) EXPECT_FALSE(p.type);
    EXPECT_FALSE(c.return_type);
}

TEST(Cluster, ClassesGiveConstructorsAndMethods)
{
    auto s = tgt::from_corpus("shapes");
    const auto& point = s->cluster.callables[s->callable("Point")];
    EXPECT_EQ(point.kind, CallableKind::Constructor);
    EXPECT_EQ(point.arity(), 2u);
    const auto& contains = s->cluster.callables[s->callable("Rect.contains")];
    EXPECT_EQ(contains.kind, CallableKind::Method);
    EXPECT_EQ(contains.owner, "Rect");
    ASSERT_EQ(contains.arity(), 1u);
    EXPECT_EQ(contains.params[0].type->name, "Point");

    const auto* entry = s->cluster.find_type("Point");
    ASSERT_NE(entry, nullptr);
    EXPECT_EQ(entry->constructor, std::optional<std::size_t>{s->callable("Point")});
    EXPECT_EQ(entry->info.origin, analysis::TypeOrigin::ModuleUnderTest);
}

TEST(Cluster, RegistryStartsWithBuiltins)
{
    auto s = tgt::from_corpus("triangle");
    ASSERT_GE(s->cluster.type_registry.size(), std::size(analysis::kBuiltinTypeNames));
    for (std::size_t i = 0; i < std::size(analysis::kBuiltinTypeNames); ++i) {
        EXPECT_EQ(s->cluster.type_registry[i].info.name, analysis::kBuiltinTypeNames[i]);
    }
}

TEST(Cluster, ContextClassesAreConstructibleButNotUnderTest)
{
    auto s = tgt::from_corpus("geometry");
    const auto* point = s->cluster.find_type("Point");
    ASSERT_NE(point, nullptr);
    EXPECT_EQ(point->info.origin, analysis::TypeOrigin::Context);
    ASSERT_TRUE(point->constructor);
    EXPECT_FALSE(s->cluster.callables[*point->constructor].under_test);
    for (auto i : s->cluster.accessible) EXPECT_TRUE(s->cluster.callables[i].under_test);
    EXPECT_EQ(s->project.context.size(), 1u);
}

TEST(Cluster, AnnotationsOnlyAddInformation)
{
    for (const auto& name : {"triangle", "stack", "strings", "geometry", "bank", "lists"}) {
        auto on = tgt::from_corpus(name, true);
        auto off = tgt::from_corpus(name, false);
        EXPECT_EQ(on->cluster.callables.size(), off->cluster.callables.size()) << name;
        EXPECT_EQ(on->cluster.accessible, off->cluster.accessible) << name;
        EXPECT_GE(typed_params(on->cluster), typed_params(off->cluster)) << name;
        EXPECT_EQ(typed_params(off->cluster), 0u) << name;
    }
}

TEST(Cluster, UnresolvedAnnotationWarnsAndFallsBack)
{
    auto s = tgt::from_text("def f(g: Ghost) -> int:\n    return 1\n");
    EXPECT_TRUE(s->cluster.unresolved.count("Ghost"));
    ASSERT_FALSE(s->cluster.warnings.empty());
    EXPECT_NE(s->cluster.warnings.front().find("Ghost"), std::string::npos);
    Rng rng(3);
    const auto& param = s->cluster.callables[s->callable("f")].params[0];
    std::set<std::string> drawn;
    for (int i = 0; i < 500; ++i) drawn.insert(analysis::candidates_for_type(s->cluster, param.type, rng).name);
    EXPECT_GT(drawn.size(), 1u);
}

TEST(Cluster, MissingContextModuleIsAWarning)
{
    const auto dir = std::filesystem::temp_directory_path() / "testgen_analysis_missing";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "lone.mdyn") << "use nowhere\n\ndef f(a: int) -> int:\n    return a\n";
    const auto project = analysis::load_project(dir, "lone");
    EXPECT_TRUE(project.context.empty());
    ASSERT_FALSE(project.warnings.empty());
    EXPECT_NE(project.warnings.front().find("nowhere"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cluster, MissingTargetModuleThrows)
{
    EXPECT_ANY_THROW((void)analysis::load_project(tgt::corpus_dir(), "no_such_module"));
}

TEST(Candidates, DeclaredTypeIsReturned)
{
    auto s = tgt::from_corpus("shapes");
    Rng rng(1);
    EXPECT_EQ(analysis::candidates_for_type(s->cluster, analysis::DeclaredType{"Point", ""}, rng).name, "Point");
    EXPECT_EQ(analysis::candidates_for_type(s->cluster, analysis::DeclaredType{"int", ""}, rng).name, "int");
}

TEST(Candidates, UntypedDrawIsUniformOverRegistry)
{
    auto s = tgt::from_corpus("shapes");
    const auto& registry = s->cluster.type_registry;
    std::map<std::string, int> counts;
    Rng rng(2024);
    constexpr int kDraws = 10'000;
    for (int i = 0; i < kDraws; ++i) ++counts[analysis::candidates_for_type(s->cluster, std::nullopt, rng).name];
    ASSERT_EQ(counts.size(), registry.size());
    EXPECT_TRUE(counts.count("Point"));
    const double expected = static_cast<double>(kDraws) / static_cast<double>(registry.size());
    double chi2 = 0.0;
    for (const auto& [name, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
    // registry is 6 builtins + Point + Rect: df = 7, p = 0.001 critical value 24.32
    ASSERT_EQ(registry.size(), 8u);
    EXPECT_LT(chi2, 24.32);
}
