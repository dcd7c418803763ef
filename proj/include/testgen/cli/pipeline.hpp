#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "testgen/analysis/cluster.hpp"
#include "testgen/assertgen/assertions.hpp"
#include "testgen/export/renderer.hpp"
#include "testgen/fitness/goals.hpp"
#include "testgen/search/context.hpp"
#include "testgen/testcase/chromosome.hpp"

namespace testgen::cli {

inline constexpr const char* kDangerVariable = "TESTGEN_DANGER_AWARE";

enum ExitCode : int {
    kExitSuccess = 0,
    kExitUsage = 1,
    kExitDangerUnset = 2,
    kExitIo = 3,
    kExitParse = 4,
};

struct RunConfig {
    std::filesystem::path project_path;
    std::string module_name;
    std::filesystem::path output_path;
    std::string algorithm = "DYNAMOSA";
    std::optional<std::uint64_t> seed;  // drawn from the OS when unset
    double max_seconds = 60.0;
    std::optional<std::uint64_t> max_iterations;
    bool stop_at_full_coverage = true;
    fitness::Criterion criterion = fitness::Criterion::Branch;
    bool use_annotations = true;
    bool generate_assertions = true;
    int verbosity = 0;
    std::optional<std::filesystem::path> stats_path;
    bool logical_clock = false;  // time measured in interpreter steps
    search::SearchConfig search;
    interp::Budget budget;
};

struct GenerationOutcome {
    testcase::TestSuiteChromosome suite;  // every test carries its result
    std::vector<search::IterationInfo> rows;
    search::IterationInfo summary;  // final suite coverage
    std::optional<assertgen::AssertionReport> assertions;
    exporter::RenderedTestModule rendered;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

// Search, assertion synthesis and rendering for an already loaded project,
// without touching the file system. Throws search::UnknownName.
[[nodiscard]] GenerationOutcome generate(const analysis::Project& project, const RunConfig& config,
                                         std::ostream* log = nullptr);

struct RunResult {
    int exit_code = kExitSuccess;
    std::string message;
    std::filesystem::path test_file;
    std::optional<GenerationOutcome> outcome;
};

// The whole pipeline including file output. Never throws for user errors;
// they map to exit codes.
[[nodiscard]] RunResult run(const RunConfig& config, std::ostream* log = nullptr);

}  // namespace testgen::cli
