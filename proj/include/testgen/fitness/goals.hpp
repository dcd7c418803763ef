#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "testgen/lang/ast.hpp"

namespace testgen::fitness {

struct LineGoal {
    lang::LineNo line = 0;
    friend auto operator<=>(const LineGoal&, const LineGoal&) = default;
};
struct BranchGoal {
    lang::PredicateId predicate = 0;
    bool polarity = true;
    friend auto operator<=>(const BranchGoal&, const BranchGoal&) = default;
};
// Entering a callable that has no branches of its own.
struct RootGoal {
    std::string callable;
    friend auto operator<=>(const RootGoal&, const RootGoal&) = default;
};

using CoverageGoal = std::variant<LineGoal, BranchGoal, RootGoal>;

[[nodiscard]] std::string describe(const CoverageGoal& goal);

enum class Criterion { Branch, Line, Both };

[[nodiscard]] std::optional<Criterion> parse_criterion(std::string_view text);

// Where a goal sits in the AST-derived dependence tree.
struct Dependence {
    std::optional<BranchGoal> parent;  // innermost enclosing branch, if any
    std::string callable;              // "f" or "Class.m"
};

struct ModuleGoals {
    std::vector<CoverageGoal> branch_goals;  // both polarities per predicate in preorder, then root goals
    std::vector<CoverageGoal> line_goals;
    std::map<lang::PredicateId, Dependence> predicates;
    std::map<lang::LineNo, Dependence> lines;

    [[nodiscard]] std::vector<CoverageGoal> for_criterion(Criterion criterion) const;
    [[nodiscard]] std::optional<BranchGoal> parent(const CoverageGoal& goal) const;
};

[[nodiscard]] ModuleGoals build_goals(const lang::AstModule& module);

}  // namespace testgen::fitness
