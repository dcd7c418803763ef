#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "testgen/corpus/corpus.hpp"
#include "testgen/lang/structure.hpp"

using namespace testgen;
namespace tgt = testgen::testing;
namespace fs = std::filesystem;

TEST(Corpus, HasEnoughModulesIncludingTriangle)
{
    const auto entries = corpus::read_manifest(tgt::corpus_dir());
    EXPECT_GE(entries.size(), 10u);
    EXPECT_NE(std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.module == "triangle"; }),
              entries.end());
    const auto modules = corpus::load_corpus(tgt::corpus_dir());
    ASSERT_EQ(modules.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(modules[i].name, entries[i].module);
}

TEST(Corpus, ManifestCountsMatchModules)
{
    for (const auto& e : corpus::read_manifest(tgt::corpus_dir())) {
        auto s = tgt::from_corpus(e.module);
        EXPECT_EQ(lang::collect_predicates(s->module()).size(), e.predicates) << e.module;
        EXPECT_EQ(lang::collect_lines(s->module()).size(), e.lines) << e.module;
        EXPECT_GT(e.max_branch_coverage, 0.0) << e.module;
        EXPECT_LE(e.max_branch_coverage, 1.0) << e.module;
    }
}

TEST(Corpus, KnownInfeasibleBranchIsDeclared)
{
    const auto entries = corpus::read_manifest(tgt::corpus_dir());
    const auto it = std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.module == "unreachable"; });
    ASSERT_NE(it, entries.end());
    EXPECT_LT(it->max_branch_coverage, 1.0);
    auto s = tgt::from_corpus("unreachable");
    const double goals = static_cast<double>(s->goals.branch_goals.size());
    EXPECT_NEAR(it->max_branch_coverage, (goals - 1.0) / goals, 1e-6);
}

TEST(Corpus, EveryModuleHasSomethingToTest)
{
    for (const auto& src : corpus::load_corpus(tgt::corpus_dir())) {
        auto s = tgt::from_corpus(src.name);
        EXPECT_FALSE(s->cluster.accessible.empty()) << src.name;
        EXPECT_TRUE(s->cluster.warnings.empty()) << src.name << ": " << s->cluster.warnings.front();
    }
}

TEST(Corpus, MissingDirectoryOrManifestThrows)
{
    EXPECT_THROW((void)corpus::read_manifest(tgt::corpus_dir() / "no_such_dir"), std::runtime_error);
    const auto dir = fs::temp_directory_path() / "testgen_corpus_empty";
    fs::create_directories(dir);
    EXPECT_THROW((void)corpus::load_corpus(dir), std::runtime_error);
    std::ofstream(dir / "manifest.tsv") << "module\tpredicates\tlines\tmax_branch_coverage\nonly_two\t1\n";
    EXPECT_THROW((void)corpus::read_manifest(dir), std::runtime_error);
    fs::remove_all(dir);
}

TEST(Corpus, NegativeCasesAreSorted)
{
    const auto files = corpus::negative_cases(tgt::corpus_dir());
    EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
    for (const auto& f : files) EXPECT_EQ(f.extension(), ".mdyn");
}
