#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "testgen/analysis/cluster.hpp"
#include "testgen/testcase/chromosome.hpp"

namespace testgen::exporter {

inline constexpr const char* kModuleAlias = "module0";

struct RenderedTestModule {
    std::string module_name;  // "test_<module>"
    std::string text;
    std::vector<std::string> test_names;
};

// How a suite is laid out as source. Only the flat function style ships.
class ExportStyle {
public:
    virtual ~ExportStyle() = default;
    [[nodiscard]] virtual RenderedTestModule render(const testcase::TestSuiteChromosome& suite,
                                                    const std::string& module_name,
                                                    const analysis::TestCluster& cluster) const = 0;
};

// `use <module> as module0` followed by one `def test_case_N():` per test.
class FlatFunctionStyle final : public ExportStyle {
public:
    [[nodiscard]] RenderedTestModule render(const testcase::TestSuiteChromosome& suite,
                                            const std::string& module_name,
                                            const analysis::TestCluster& cluster) const override;
};

[[nodiscard]] RenderedTestModule render(const testcase::TestSuiteChromosome& suite, const std::string& module_name,
                                        const analysis::TestCluster& cluster);

// "BankAccount" -> "bank_account", "NoneType" -> "none_type".
[[nodiscard]] std::string snake_case(const std::string& name);

// The literal spelling of a snapshot; pre: interp::is_literal_snapshot.
[[nodiscard]] std::string render_literal(const interp::Snapshot& snapshot);

class ExportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] std::filesystem::path output_file(const std::filesystem::path& dir, const std::string& module_name);

// Creates `dir` if needed and overwrites the test file. Throws ExportError.
std::filesystem::path write_test_module(const RenderedTestModule& rendered, const std::filesystem::path& dir);

}  // namespace testgen::exporter
