#pragma once

#include "testgen/interp/value.hpp"
#include "testgen/lang/ast.hpp"

namespace testgen::interp {

// Branch distances of one predicate evaluation. Exactly one of the two
// distances is zero: the one on the side that was taken.
struct PredicateOutcome {
    bool taken = false;
    double true_distance = 0.0;
    double false_distance = 0.0;
};

inline constexpr double kBranchConstant = 1.0;

// Relational operators. Numeric operands use the classical rule table
// (|a-b| for ==, a-b+k / b-a for <, ...); any other pair of operands gets
// distance 1 on the untaken side. Ordering operators on unorderable operands
// throw RuntimeError(TypeError), matching the interpreter's semantics.
[[nodiscard]] PredicateOutcome relational_distance(lang::BinaryOp op, const Value& lhs, const Value& rhs);

// Plain truthiness test, e.g. `if x:`.
[[nodiscard]] PredicateOutcome truthiness_distance(const Value& v);

[[nodiscard]] PredicateOutcome negate(const PredicateOutcome& p);
[[nodiscard]] PredicateOutcome combine_and(const PredicateOutcome& lhs, const PredicateOutcome& rhs);
[[nodiscard]] PredicateOutcome combine_or(const PredicateOutcome& lhs, const PredicateOutcome& rhs);

}  // namespace testgen::interp
