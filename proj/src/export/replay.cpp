#include "testgen/export/replay.hpp"

#include <stdexcept>

#include "testgen/lang/parser.hpp"
#include "testgen/lang/structure.hpp"

namespace testgen::exporter {

std::vector<ReplayOutcome> replay(const std::string& text, const std::string& module_name,
                                  std::vector<std::shared_ptr<const lang::AstModule>> modules,
                                  interp::Budget budget)
{
    for (const auto& m : modules) {
        if (m->name == module_name) {
            throw std::invalid_argument("test module name '" + module_name + "' clashes with a module under test");
        }
    }
    auto tests = std::make_shared<const lang::AstModule>(lang::parse_module({module_name, {}, text}));
    modules.insert(modules.begin(), tests);
    const interp::Program program(modules, module_name);
    interp::InterpreterOptions options;
    options.max_steps = budget.max_steps;
    options.compute_distances = false;

    std::vector<ReplayOutcome> outcomes;
    for (const auto& def : lang::definitions_in_order(*tests)) {
        const auto* const* fn = std::get_if<const lang::FunctionDef*>(&def);
        if (!fn || (*fn)->name.rfind("test_", 0) != 0) continue;
        ReplayOutcome outcome;
        outcome.test_name = (*fn)->name;
        const interp::Value* callee = program.lookup_path(*program.target(), (*fn)->name);
        if (!callee) continue;
        interp::Interpreter interpreter(program, options);
        try {
            interpreter.call(*callee, {});
            outcome.passed = true;
        } catch (const interp::RuntimeError& e) {
            outcome.message = std::string(interp::to_string(e.kind())) + ": " + e.what();
        } catch (const interp::BudgetExhausted& e) {
            outcome.message = e.what();
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

}  // namespace testgen::exporter
