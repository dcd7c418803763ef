#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "testgen/lang/parser.hpp"

namespace testgen::corpus {

// One manifest.tsv row. Counts are hand-made and cross-checked by the tests.
struct ManifestEntry {
    std::string module;
    std::size_t predicates = 0;
    std::size_t lines = 0;
    double max_branch_coverage = 1.0;  // below 1 when some branch is infeasible
    std::string note;
};

// Throws std::runtime_error if the directory or manifest is missing or malformed.
[[nodiscard]] std::vector<ManifestEntry> read_manifest(const std::filesystem::path& dir);

// Sources of every manifest module, in manifest order.
[[nodiscard]] std::vector<lang::SourceModule> load_corpus(const std::filesystem::path& dir);

// `<dir>/negative/*.mdyn`, sorted by file name.
[[nodiscard]] std::vector<std::filesystem::path> negative_cases(const std::filesystem::path& dir);

}  // namespace testgen::corpus
