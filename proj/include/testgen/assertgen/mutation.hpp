#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "testgen/lang/ast.hpp"

namespace testgen::assertgen {

enum class MutationOperator { AOR, ROR, COR, CRP, NotRemoval };

[[nodiscard]] const char* to_string(MutationOperator op);

struct Mutant {
    std::size_t id = 0;
    MutationOperator op = MutationOperator::AOR;
    lang::NodeId location = 0;
    std::string description;  // e.g. "== -> !=" at line 2
    std::shared_ptr<const lang::AstModule> module;
};

// Every operator at every applicable site, in preorder. Mutants keep the
// original's NodeIds, PredicateIds and lines.
[[nodiscard]] std::vector<Mutant> generate_mutants(const lang::AstModule& module);

}  // namespace testgen::assertgen
