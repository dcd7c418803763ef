#pragma once

#include <memory>
#include <string>
#include <vector>

#include "testgen/interp/executor.hpp"
#include "testgen/lang/ast.hpp"

namespace testgen::exporter {

struct ReplayOutcome {
    std::string test_name;
    bool passed = false;
    std::string message;  // failure reason
};

// `module_name` names the rendered test module ("test_<module>") and must
// differ from every given module; std::invalid_argument otherwise.
// Parses a rendered test module and runs each `test_*` function against the
// given modules (module under test first, then its context). Throws
// lang::SyntaxError if the text does not parse.
[[nodiscard]] std::vector<ReplayOutcome> replay(const std::string& text, const std::string& module_name,
                                                std::vector<std::shared_ptr<const lang::AstModule>> modules,
                                                interp::Budget budget = {});

}  // namespace testgen::exporter
