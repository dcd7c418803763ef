#include "testgen/cli/statistics.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace testgen::cli {

namespace {

std::string row(const search::IterationInfo& info)
{
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, "%.6f,%llu,%.6f,%.6f", info.elapsed_seconds,
                  static_cast<unsigned long long>(info.iteration), info.branch_coverage, info.line_coverage);
    return buffer;
}

}  // namespace

std::string format_statistics(const std::vector<search::IterationInfo>& rows, const search::IterationInfo& summary)
{
    std::string out = std::string(kStatisticsHeader) + "\n";
    for (const auto& r : rows) out += row(r) + "\n";
    out += row(summary) + "\n";
    return out;
}

std::string format_kill_report(const assertgen::AssertionReport& report)
{
    std::string out = "mutant_id,operator,killed_by\n";
    for (const auto& k : report.kills) {
        out += std::to_string(k.mutant_id) + "," + assertgen::to_string(k.op) + ","
               + (k.killed_by ? "test_case_" + std::to_string(*k.killed_by) : std::string()) + "\n";
    }
    return out;
}

std::filesystem::path kill_report_path(const std::filesystem::path& stats_path)
{
    return stats_path.parent_path() / (stats_path.stem().string() + "_mutants.csv");
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace testgen::cli
