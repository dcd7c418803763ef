#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "testgen/lang/ast.hpp"

namespace testgen::interp {

struct ListObject;
struct Instance;
struct CallableObject;
struct ModuleScope;

struct NoneValue {
    friend bool operator==(NoneValue, NoneValue) { return true; }
};

using ListPtr = std::shared_ptr<ListObject>;
using InstancePtr = std::shared_ptr<Instance>;
using CallablePtr = std::shared_ptr<const CallableObject>;

// Runtime value. Lists and instances are reference types with identity.
using Value = std::variant<NoneValue, bool, std::int64_t, double, std::string, ListPtr, InstancePtr, CallablePtr>;

struct ListObject {
    std::vector<Value> items;
};

struct ClassInfo {
    const lang::ClassDef* def = nullptr;
    const ModuleScope* scope = nullptr;
};

struct Instance {
    const ClassInfo* cls = nullptr;
    std::map<std::string, Value> attributes;
};

enum class Builtin { Len, Abs, Str, Int, Float };

enum class BuiltinMethod {
    ListAppend,
    ListPop,
    StrUpper,
    StrLower,
    StrStartswith,
    StrEndswith,
    StrFind,
};

struct FunctionRef {
    const lang::FunctionDef* def = nullptr;
    const ModuleScope* scope = nullptr;
    const ClassInfo* owner = nullptr;
};
struct BoundMethod {
    InstancePtr self;
    FunctionRef function;
};
struct ClassRef {
    const ClassInfo* cls = nullptr;
};
struct ModuleRef {
    const ModuleScope* scope = nullptr;
};
struct BuiltinFunctionRef {
    Builtin builtin;
};
struct BoundBuiltin {
    Value receiver;
    BuiltinMethod method;
};

struct CallableObject {
    std::variant<FunctionRef, BoundMethod, ClassRef, ModuleRef, BuiltinFunctionRef, BoundBuiltin> target;
};

enum class ErrorKind {
    TypeError,
    NameError,
    AttributeError,
    ZeroDivisionError,
    IndexError,
    ValueError,
    OverflowError,
    RecursionError,
    AssertionError,
};

[[nodiscard]] const char* to_string(ErrorKind kind);

// Raised by the interpreter for errors in the executed program; never escapes
// execute_test.
class RuntimeError : public std::runtime_error {
public:
    RuntimeError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[nodiscard]] bool truthy(const Value& v);
[[nodiscard]] std::string type_name(const Value& v);
[[nodiscard]] bool is_numeric(const Value& v);
[[nodiscard]] double as_double(const Value& v);  // pre: is_numeric(v)

// Equality with the subject language's semantics (numeric tower, element-wise lists).
[[nodiscard]] bool values_equal(const Value& a, const Value& b);

// Three-way ordering; throws RuntimeError(TypeError) for unorderable operands.
[[nodiscard]] int compare_values(const Value& a, const Value& b);

// Human-readable spelling used by str() and diagnostics.
[[nodiscard]] std::string repr(const Value& v);

}  // namespace testgen::interp
