#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "testgen/assertgen/assertions.hpp"
#include "testgen/search/context.hpp"

namespace testgen::cli {

inline constexpr const char* kStatisticsHeader = "elapsed_s,iteration,branch_coverage,line_coverage";

// Collects one row per search iteration.
class StatisticsRecorder final : public search::SearchObserver {
public:
    void on_iteration(const search::IterationInfo& info) override { rows_.push_back(info); }
    [[nodiscard]] const std::vector<search::IterationInfo>& rows() const { return rows_; }

private:
    std::vector<search::IterationInfo> rows_;
};

// Header, one line per row, then the summary line.
[[nodiscard]] std::string format_statistics(const std::vector<search::IterationInfo>& rows,
                                            const search::IterationInfo& summary);

[[nodiscard]] std::string format_kill_report(const assertgen::AssertionReport& report);

// Path of the mutant kill report that accompanies a statistics file.
[[nodiscard]] std::filesystem::path kill_report_path(const std::filesystem::path& stats_path);

// Writes text to a file, creating parent directories. Throws std::runtime_error.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace testgen::cli
