#pragma once

#include <filesystem>
#include <string>

#include "testgen/lang/ast.hpp"
#include "testgen/lang/lexer.hpp"

namespace testgen::lang {

struct SourceModule {
    std::string name;
    std::filesystem::path path;
    std::string text;
};

[[nodiscard]] bool is_valid_identifier(std::string_view name);

// Parses MiniDyn source. Throws SyntaxError carrying the offending location.
[[nodiscard]] AstModule parse_module(const SourceModule& src);

// Reads `<dir>/<name>.mdyn`. Throws std::runtime_error if the file is unreadable.
[[nodiscard]] SourceModule read_source(const std::filesystem::path& dir, const std::string& name);

}  // namespace testgen::lang
