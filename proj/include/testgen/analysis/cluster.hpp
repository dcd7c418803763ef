#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "testgen/interp/program.hpp"
#include "testgen/lang/ast.hpp"
#include "testgen/random.hpp"

namespace testgen::analysis {

enum class TypeOrigin { Builtin, ModuleUnderTest, Context };

struct TypeInfo {
    std::string name;  // "int", "list", "Point", ...
    TypeOrigin origin = TypeOrigin::Builtin;

    friend bool operator==(const TypeInfo& a, const TypeInfo& b) { return a.name == b.name; }
};

inline constexpr const char* kBuiltinTypeNames[] = {"int", "float", "str", "bool", "list", "none"};

// A declared parameter or return type. `element` is set for `list[T]` only.
struct DeclaredType {
    std::string name;
    std::string element;

    friend bool operator==(const DeclaredType&, const DeclaredType&) = default;
};

enum class CallableKind { Function, Method, Constructor };

struct CallableParam {
    std::string name;
    std::optional<DeclaredType> type;
};

struct GenericCallable {
    CallableKind kind = CallableKind::Function;
    std::string name;        // function or method name; the class name for constructors
    std::string owner;       // class name for methods/constructors
    std::string access_path; // dotted path from the namespace of the module under test
    bool under_test = false;
    std::vector<CallableParam> params;  // receiver excluded
    std::optional<DeclaredType> return_type;

    [[nodiscard]] std::string id() const;  // "f", "Stack", "Stack.push"
    [[nodiscard]] std::size_t arity() const { return params.size(); }
};

struct TypeEntry {
    TypeInfo info;
    std::optional<std::size_t> constructor;  // index into TestCluster::callables
    std::vector<std::size_t> modifiers;      // method indices
};

struct TestCluster {
    std::vector<GenericCallable> callables;
    std::vector<std::size_t> accessible;  // callables of the module under test, in source order
    std::vector<TypeEntry> type_registry; // builtins first, then classes
    std::set<std::string> unresolved;     // class annotations that named no visible class
    std::vector<std::string> warnings;

    [[nodiscard]] const TypeEntry* find_type(std::string_view name) const;
};

// Extension seam for external type inference. Consulted for parameters that
// carry no usable declared type.
class TypeInferenceProvider {
public:
    virtual ~TypeInferenceProvider() = default;
    virtual std::optional<DeclaredType> infer_parameter(const GenericCallable& callable, std::size_t index) = 0;
};

class NoTypeInference final : public TypeInferenceProvider {
public:
    std::optional<DeclaredType> infer_parameter(const GenericCallable&, std::size_t) override { return std::nullopt; }
};

// The parsed module under test plus every module reachable through `use`.
struct Project {
    std::shared_ptr<const lang::AstModule> target;
    std::vector<std::shared_ptr<const lang::AstModule>> context;
    std::vector<std::string> warnings;

    [[nodiscard]] std::vector<std::shared_ptr<const lang::AstModule>> all_modules() const;
};

// Parses `<dir>/<name>.mdyn` (errors propagate: runtime_error for I/O,
// SyntaxError for parsing) and then its `use` closure; context modules that
// cannot be read or parsed are skipped with a warning.
[[nodiscard]] Project load_project(const std::filesystem::path& dir, const std::string& module_name);

// Context-free variant for modules that are already parsed.
[[nodiscard]] Project make_project(std::shared_ptr<const lang::AstModule> target,
                                   std::vector<std::shared_ptr<const lang::AstModule>> context = {});

[[nodiscard]] TestCluster build_test_cluster(const interp::Program& program, bool use_annotations,
                                             TypeInferenceProvider* provider = nullptr);

// Convenience overload: links a Program internally.
[[nodiscard]] TestCluster build_test_cluster(const Project& project, bool use_annotations);

[[nodiscard]] TypeInfo candidates_for_type(const TestCluster& cluster, const std::optional<DeclaredType>& declared,
                                           Rng& rng);

}  // namespace testgen::analysis
