#pragma once

#include <cstdint>
#include <string>

#include "testgen/lang/ast.hpp"

namespace testgen::lang {

// Pretty-prints a module so that parse(render(m)) is structurally equal to m.
[[nodiscard]] std::string render_source(const AstModule& module);
[[nodiscard]] std::string render_expr(const Expr& expr);

// Literal spellings shared with the test exporter.
[[nodiscard]] std::string quote_string(const std::string& value);
[[nodiscard]] std::string format_float(double value);
[[nodiscard]] std::string format_int(std::int64_t value);

}  // namespace testgen::lang
