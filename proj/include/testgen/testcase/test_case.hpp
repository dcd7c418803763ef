#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "testgen/analysis/cluster.hpp"
#include "testgen/assertgen/assertion.hpp"

namespace testgen::testcase {

inline constexpr std::size_t kDefaultMaxLength = 40;

// Variables are identified by the index of the statement defining them.
using VarRef = std::size_t;

struct NoneValue {
    friend bool operator==(NoneValue, NoneValue) { return true; }
};
using PrimitiveValue = std::variant<NoneValue, bool, std::int64_t, double, std::string>;

struct PrimitiveStatement {
    PrimitiveValue value;
    friend bool operator==(const PrimitiveStatement&, const PrimitiveStatement&) = default;
};
struct ListStatement {
    std::vector<VarRef> elements;
    friend bool operator==(const ListStatement&, const ListStatement&) = default;
};
struct ConstructorStatement {
    std::size_t callable = 0;  // index into TestCluster::callables
    std::vector<VarRef> args;
    friend bool operator==(const ConstructorStatement&, const ConstructorStatement&) = default;
};
struct FunctionStatement {
    std::size_t callable = 0;
    std::vector<VarRef> args;
    friend bool operator==(const FunctionStatement&, const FunctionStatement&) = default;
};
struct MethodStatement {
    VarRef receiver = 0;
    std::size_t callable = 0;
    std::vector<VarRef> args;
    friend bool operator==(const MethodStatement&, const MethodStatement&) = default;
};

using Statement = std::variant<PrimitiveStatement, ListStatement, ConstructorStatement, FunctionStatement,
                               MethodStatement>;

struct TestCase {
    std::vector<Statement> statements;
    std::vector<assertgen::Assertion> assertions;

    [[nodiscard]] std::size_t size() const { return statements.size(); }
    [[nodiscard]] bool empty() const { return statements.empty(); }

    friend bool operator==(const TestCase&, const TestCase&) = default;
};

// Variables read by a statement, receiver first.
[[nodiscard]] std::vector<VarRef> references(const Statement& statement);
[[nodiscard]] std::vector<VarRef*> mutable_references(Statement& statement);
[[nodiscard]] bool is_call(const Statement& statement);

// Type a variable is known to hold without running the test: primitives and
// lists by construction, constructors by class, calls by declared return
// type. Empty when unknown.
[[nodiscard]] std::string static_type(const TestCase& test, VarRef var, const analysis::TestCluster& cluster);

// Checks definition-before-use, arity, callable kinds and the length cap.
// Returns an empty string when valid, else the first problem found.
[[nodiscard]] std::string validate(const TestCase& test, const analysis::TestCluster& cluster,
                                   std::size_t max_length = kDefaultMaxLength);

// Removes statement `index` and every statement depending on it (transitively);
// remaining references are renumbered. Assertions are dropped.
void remove_with_dependents(TestCase& test, std::size_t index);

}  // namespace testgen::testcase
