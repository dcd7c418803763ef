#pragma once

#include <cstddef>
#include <string>

#include "testgen/interp/trace.hpp"

namespace testgen::assertgen {

inline constexpr double kFloatTolerance = 1e-6;

enum class AssertionKind { PrimitiveEquals, FloatApprox, IsNone, AttributeEquals };

// A regression assertion placed after `statement`. `attribute` is set for
// AttributeEquals only; `expected` always comes from the original module.
struct Assertion {
    AssertionKind kind = AssertionKind::PrimitiveEquals;
    std::size_t statement = 0;
    std::size_t variable = 0;
    std::string attribute;
    interp::Snapshot expected;

    friend bool operator==(const Assertion&, const Assertion&) = default;
};

// Same check regardless of placement.
[[nodiscard]] inline bool same_check(const Assertion& a, const Assertion& b)
{
    return a.kind == b.kind && a.variable == b.variable && a.attribute == b.attribute && a.expected == b.expected;
}

// Whether the observed value satisfies the assertion.
[[nodiscard]] bool holds(const Assertion& assertion, const interp::Snapshot& observed);

}  // namespace testgen::assertgen
