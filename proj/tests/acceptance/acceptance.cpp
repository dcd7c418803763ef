#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "listing_strategy.hpp"
#include "support.hpp"
#include "testgen/assertgen/mutation.hpp"
#include "testgen/cli/pipeline.hpp"
#include "testgen/corpus/corpus.hpp"
#include "testgen/export/replay.hpp"
#include "testgen/interp/distance.hpp"
#include "testgen/lang/structure.hpp"

using namespace testgen;
namespace tgt = testgen::testing;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kSearchMargin = 0.05;       // each search algorithm over RANDOM
constexpr double kDynamosaSlack = 0.02;      // DynaMOSA against the best other mean
constexpr int kTriangleSeedsRequired = 9;    // of kSeeds
constexpr int kOracleTestsPerModule = 1000;
constexpr int kGridMin = -10;
constexpr int kGridMax = 10;
constexpr double kFloatDistanceTolerance = 1e-9;
constexpr double kStopIterations = 5;
constexpr double kTimeBudget = 1.0;
constexpr double kTimeBudgetWall = 2.0;
constexpr std::size_t kFixtureMaxLines = 40;
constexpr std::uint64_t kFixtureIterations = 10'000;

struct Options {
    int seeds = 10;
    double seconds = 60.0;
};

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::vector<std::string> corpus_modules()
{
    std::vector<std::string> out;
    for (const auto& e : corpus::read_manifest(tgt::corpus_dir())) out.push_back(e.module);
    return out;
}

double mean(const std::vector<double>& xs)
{
    return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs)
{
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

std::string percent(double x)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << 100.0 * x << "%";
    return s.str();
}

int run_tool(const std::string& args)
{
    const std::string command = "TESTGEN_DANGER_AWARE=1 \"" + std::string(TESTGEN_CLI_PATH) + "\" " + args
                                + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Final branch coverage of one wall-clock search run.
double experiment_run(const std::string& module, const std::string& algorithm, bool annotations, std::uint64_t seed,
                      double seconds)
{
    auto s = tgt::from_corpus(module, annotations);
    search::StoppingConditions stop;
    stop.max_seconds = seconds;
    const auto run = tgt::run_search(*s, algorithm, stop, seed, false, fitness::Criterion::Branch);
    return run.branch_coverage;
}

// Mean corpus coverage per seed, keyed by (algorithm, annotations).
using SeedMeans = std::map<std::pair<std::string, bool>, std::vector<double>>;

struct ExperimentData {
    SeedMeans means;
    std::map<std::uint64_t, double> triangle;  // DynaMOSA, annotated
};

ExperimentData& experiment_cache()
{
    static ExperimentData data;
    return data;
}

void run_experiments(const Options& options, const std::vector<std::pair<std::string, bool>>& configs)
{
    auto& data = experiment_cache();
    const auto modules = corpus_modules();
    for (const auto& [algorithm, annotations] : configs) {
        if (data.means.count({algorithm, annotations})) continue;
        std::vector<double> per_seed;
        for (int seed = 1; seed <= options.seeds; ++seed) {
            std::vector<double> coverage;
            for (const auto& module : modules) {
                const double c = experiment_run(module, algorithm, annotations, seed, options.seconds);
                coverage.push_back(c);
                if (algorithm == "DYNAMOSA" && annotations && module == "triangle") data.triangle[seed] = c;
            }
            per_seed.push_back(mean(coverage));
            std::cerr << algorithm << (annotations ? "" : " (no annotations)") << " seed " << seed << ": "
                      << percent(per_seed.back()) << "\n";
        }
        data.means[{algorithm, annotations}] = per_seed;
    }
}

Verdict criterion_ordering(const Options& options)
{
    const std::vector<std::string> algorithms = {"RANDOM", "MOSA", "DYNAMOSA", "MIO", "WHOLE_SUITE",
                                                 "WHOLE_SUITE_ARCHIVE"};
    std::vector<std::pair<std::string, bool>> configs;
    for (const auto& a : algorithms) configs.emplace_back(a, true);
    run_experiments(options, configs);

    std::map<std::string, double> means;
    for (const auto& a : algorithms) means[a] = mean(experiment_cache().means.at({a, true}));
    bool pass = true;
    std::ostringstream detail;
    for (const auto& a : algorithms) detail << a << "=" << percent(means[a]) << " ";
    for (const auto& a : algorithms) {
        if (a == "RANDOM") continue;
        if (means[a] < means["RANDOM"] + kSearchMargin) {
            pass = false;
            detail << "[" << a << " not " << percent(kSearchMargin) << " above RANDOM] ";
        }
        if (a != "DYNAMOSA" && means["DYNAMOSA"] < means[a] - kDynamosaSlack) {
            pass = false;
            detail << "[DYNAMOSA below " << a << "] ";
        }
    }
    return {pass, detail.str()};
}

Verdict criterion_ablation(const Options& options)
{
    run_experiments(options, {{"DYNAMOSA", true}, {"DYNAMOSA", false}});
    const double typed = median(experiment_cache().means.at({"DYNAMOSA", true}));
    const double untyped = median(experiment_cache().means.at({"DYNAMOSA", false}));
    int full = 0;
    for (const auto& [seed, c] : experiment_cache().triangle) full += c == 1.0;
    const int required = options.seeds * kTriangleSeedsRequired / 10;
    std::ostringstream detail;
    detail << "median with annotations " << percent(typed) << ", without " << percent(untyped)
           << "; triangle full coverage in " << full << "/" << options.seeds << " seeds";
    return {typed >= untyped && full >= required, detail.str()};
}

// Records events for re-execution without distance bookkeeping.
struct LoggingListener final : interp::ExecutionListener {
    std::set<lang::LineNo> lines;
    std::map<lang::PredicateId, std::set<bool>> outcomes;
    void on_line(lang::LineNo line) override { lines.insert(line); }
    void on_predicate(lang::PredicateId id, const interp::PredicateOutcome& o) override
    {
        outcomes[id].insert(o.taken);
    }
};

Verdict criterion_oracle()
{
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    Rng rng(2024);
    for (const auto& module : corpus_modules()) {
        auto s = tgt::from_corpus(module);
        testcase::TestFactory factory(s->cluster);
        for (int i = 0; i < kOracleTestsPerModule; ++i) {
            auto test = factory.sample_random_test_case(rng);
            for (auto k = pick_index(rng, 4); k > 0; --k) test = testcase::mutate(test, factory, rng);
            const auto traced = s->executor->execute(test);
            LoggingListener log;
            (void)s->executor->execute_plain(test, log);
            std::map<lang::PredicateId, std::set<bool>> instrumented;
            for (const auto& [id, d] : traced.trace.branch_results) {
                if (d.true_distance == 0.0) instrumented[id].insert(true);
                if (d.false_distance == 0.0) instrumented[id].insert(false);
            }
            ++cases;
            if (traced.trace.lines_hit != log.lines || instrumented != log.outcomes) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(cases - mismatches) + "/" + std::to_string(cases) + " traces agree"};
}

std::pair<double, double> hand_distance(lang::BinaryOp op, double a, double b)
{
    constexpr double k = interp::kBranchConstant;
    using lang::BinaryOp;
    switch (op) {
    case BinaryOp::Eq: return {std::abs(a - b), a == b ? k : 0.0};
    case BinaryOp::Ne: return {a != b ? 0.0 : k, std::abs(a - b)};
    case BinaryOp::Lt: return {a < b ? 0.0 : a - b + k, a < b ? b - a : 0.0};
    case BinaryOp::Le: return {a <= b ? 0.0 : a - b, a <= b ? b - a + k : 0.0};
    case BinaryOp::Gt: return {a > b ? 0.0 : b - a + k, a > b ? a - b : 0.0};
    default: return {a >= b ? 0.0 : b - a, a >= b ? a - b + k : 0.0};
    }
}

Verdict criterion_distances()
{
    using lang::BinaryOp;
    const BinaryOp ops[] = {BinaryOp::Eq, BinaryOp::Ne, BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt, BinaryOp::Ge};
    std::size_t checked = 0;
    std::size_t failures = 0;
    const auto check = [&](BinaryOp op, const interp::Value& va, const interp::Value& vb, double a, double b,
                           double tolerance) {
        const auto d = interp::relational_distance(op, va, vb);
        const auto [t, f] = hand_distance(op, a, b);
        const bool one_zero = (d.true_distance == 0.0) != (d.false_distance == 0.0);
        const bool taken_ok = d.taken == (d.true_distance == 0.0);
        ++checked;
        if (!one_zero || !taken_ok || std::abs(d.true_distance - t) > tolerance
            || std::abs(d.false_distance - f) > tolerance) {
            ++failures;
        }
    };
    for (auto op : ops) {
        for (int a = kGridMin; a <= kGridMax; ++a) {
            for (int b = kGridMin; b <= kGridMax; ++b) {
                check(op, interp::Value{std::int64_t{a}}, interp::Value{std::int64_t{b}}, a, b, 0.0);
                const double fa = a * 0.5 + 0.25;
                const double fb = b * 0.5;
                check(op, interp::Value{fa}, interp::Value{fb}, fa, fb, kFloatDistanceTolerance);
                check(op, interp::Value{fa}, interp::Value{std::int64_t{b}}, fa, b, kFloatDistanceTolerance);
            }
        }
    }
    return {failures == 0, std::to_string(checked - failures) + "/" + std::to_string(checked) + " evaluations"};
}

Verdict criterion_assertions()
{
    std::size_t total = 0;
    std::size_t sound = 0;
    std::size_t effective = 0;
    for (const auto& module : corpus_modules()) {
        const auto project = analysis::load_project(tgt::corpus_dir(), module);
        cli::RunConfig config;
        config.module_name = module;
        config.seed = 7;
        config.max_seconds = 2.0;
        config.logical_clock = true;
        auto out = cli::generate(project, config);
        if (!out.assertions) continue;
        const auto mutants = assertgen::generate_mutants(*project.target);
        const auto cluster = analysis::build_test_cluster(project, true);
        for (const auto& origin : out.assertions->origins) {
            // The test cut down to this one assertion.
            testcase::TestSuiteChromosome single;
            single.tests.push_back(out.suite.tests[origin.test]);
            auto& assertions = single.tests[0].test.assertions;
            assertions = {assertions.at(origin.assertion)};
            const auto rendered = exporter::render(single, module, cluster);
            ++total;
            const auto on_original = exporter::replay(rendered.text, rendered.module_name, project.all_modules());
            sound += on_original.size() == 1 && on_original[0].passed;
            auto modules = project.all_modules();
            modules[0] = mutants.at(origin.mutant_id).module;
            const auto on_mutant = exporter::replay(rendered.text, rendered.module_name, modules);
            effective += on_mutant.size() == 1 && !on_mutant[0].passed;
        }
    }
    std::ostringstream detail;
    detail << total << " assertions: " << sound << " pass on the original, " << effective << " fail on their mutant";
    return {total > 0 && sound == total && effective == total, detail.str()};
}

Verdict criterion_determinism()
{
    const auto root = fs::temp_directory_path() / "testgen_acceptance_determinism";
    std::size_t identical = 0;
    std::size_t modules = 0;
    std::string differing;
    for (const auto& module : corpus_modules()) {
        ++modules;
        std::string files[2][2];
        for (int k = 0; k < 2; ++k) {
            const auto dir = root / std::to_string(k);
            fs::remove_all(dir);
            const auto stats = dir / "stats.csv";
            const int code = run_tool("--project-path \"" + tgt::corpus_dir().string() + "\" --module-name " + module
                                      + " --output-path \"" + dir.string() + "\" --seed 42 --maximum-search-time 0.5"
                                      + " --logical-clock --stats-path \"" + stats.string() + "\"");
            if (code != 0) break;
            files[k][0] = read_file(dir / ("test_" + module + ".mdyn"));
            files[k][1] = read_file(stats);
        }
        if (!files[0][0].empty() && files[0][0] == files[1][0] && files[0][1] == files[1][1]) {
            ++identical;
        } else {
            differing += " " + module;
        }
    }
    fs::remove_all(root);
    return {identical == modules,
            std::to_string(identical) + "/" + std::to_string(modules) + " modules byte-identical" + differing};
}

Verdict criterion_stopping()
{
    std::ostringstream detail;
    bool pass = true;

    cli::RunConfig config;
    config.module_name = "nesting";
    config.seed = 5;
    config.max_seconds = 0;
    config.max_iterations = static_cast<std::uint64_t>(kStopIterations);
    config.stop_at_full_coverage = false;
    config.generate_assertions = false;
    const auto iterations = cli::generate(analysis::load_project(tgt::corpus_dir(), "nesting"), config);
    detail << "MaxIterations=5 gave " << iterations.rows.size() << " rows; ";
    pass &= iterations.rows.size() == static_cast<std::size_t>(kStopIterations);

    config.module_name = "area";
    config.max_iterations = 1000;
    config.stop_at_full_coverage = true;
    const auto full = cli::generate(analysis::load_project(tgt::corpus_dir(), "area"), config);
    detail << "full coverage stop at iteration " << full.summary.iteration << " with " << percent(full.summary.branch_coverage)
           << "; ";
    pass &= full.summary.iteration == 1 && full.summary.branch_coverage == 1.0;

    const auto dir = fs::temp_directory_path() / "testgen_acceptance_time";
    const auto start = std::chrono::steady_clock::now();
    const int code = run_tool("--project-path \"" + tgt::corpus_dir().string() + "\" --module-name unreachable"
                              + " --output-path \"" + dir.string() + "\" --seed 3 --maximum-search-time "
                              + std::to_string(kTimeBudget));
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fs::remove_all(dir);
    detail << "1 s budget ended after " << std::fixed << std::setprecision(2) << took << " s wall";
    pass &= code == 0 && took <= kTimeBudgetWall;
    return {pass, detail.str()};
}

std::size_t count_lines(const fs::path& path)
{
    std::ifstream in(path);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
}

Verdict criterion_extension()
{
    if (!search::strategy_registry().contains("LISTING_RANDOM")) {
        search::register_strategy("LISTING_RANDOM", [] { return std::make_unique<ListingStrategy>(); });
    }
    const std::size_t lines = count_lines(TESTGEN_FIXTURE_PATH);
    cli::RunConfig config;
    config.module_name = "triangle";
    config.algorithm = "LISTING_RANDOM";
    config.seed = 11;
    config.max_seconds = 0;
    config.max_iterations = kFixtureIterations;
    config.generate_assertions = false;
    const auto out = cli::generate(analysis::load_project(tgt::corpus_dir(), "triangle"), config);
    std::ostringstream detail;
    detail << "fixture is " << lines << " lines; " << percent(out.summary.branch_coverage) << " after "
           << out.summary.iteration << " iterations";
    return {lines <= kFixtureMaxLines && out.summary.branch_coverage == 1.0 && !out.rendered.test_names.empty(),
            detail.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance suite"};
    std::vector<int> criteria = {1, 2, 3, 4, 5, 6, 7, 8};
    Options options;
    app.add_option("--criteria", criteria, "Criteria to check")->delimiter(',')->check(CLI::Range(1, 8));
    app.add_option("--seeds", options.seeds, "Seeds per experiment (development aid)")->check(CLI::PositiveNumber);
    app.add_option("--seconds", options.seconds, "Search budget per experiment run (development aid)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    const std::map<int, std::pair<const char*, std::function<Verdict()>>> table = {
        {1, {"algorithm ordering", [&] { return criterion_ordering(options); }}},
        {2, {"typing ablation", [&] { return criterion_ablation(options); }}},
        {3, {"coverage oracle equivalence", criterion_oracle}},
        {4, {"branch distance grid", criterion_distances}},
        {5, {"assertion soundness and effectiveness", criterion_assertions}},
        {6, {"determinism", criterion_determinism}},
        {7, {"stopping conditions", criterion_stopping}},
        {8, {"extension smoke test", criterion_extension}},
    };
    if (options.seeds != 10 || options.seconds != 60.0) {
        std::cout << "note: experiments use " << options.seeds << " seeds x " << options.seconds
                  << " s instead of 10 x 60 s\n";
    }
    bool all = true;
    std::sort(criteria.begin(), criteria.end());
    criteria.erase(std::unique(criteria.begin(), criteria.end()), criteria.end());
    for (int c : criteria) {
        const auto& [title, check] = table.at(c);
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        all &= v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << c << " " << title << ": " << v.detail << std::endl;
    }
    return all ? 0 : 1;
}
