#pragma once

#include <set>
#include <string>
#include <vector>

#include "testgen/lang/ast.hpp"

namespace testgen::lang {

// One entry per if/elif/while condition, in preorder (source) order.
[[nodiscard]] std::vector<PredicateId> collect_predicates(const AstModule& module);

// Lines holding executable statements, including `elif` headers. `def`,
// `class`, `else:` and blank lines never appear.
[[nodiscard]] std::set<LineNo> collect_lines(const AstModule& module);

// Span-free S-expression of the module; equal dumps mean structurally equal ASTs.
[[nodiscard]] std::string dump_structure(const AstModule& module);
[[nodiscard]] bool structurally_equal(const AstModule& a, const AstModule& b);

// True if evaluating `expr` cannot run user code (no calls anywhere inside).
[[nodiscard]] bool is_call_free(const Expr& expr);

}  // namespace testgen::lang
