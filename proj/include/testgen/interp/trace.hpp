#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "testgen/interp/distance.hpp"
#include "testgen/interp/value.hpp"
#include "testgen/lang/ast.hpp"

namespace testgen::interp {

struct OpaqueObject {
    std::string type;
    friend bool operator==(const OpaqueObject&, const OpaqueObject&) = default;
};

// Deep, immutable copy of an observed value. Objects nested in lists are
// recorded by type only.
struct Snapshot {
    using Node = std::variant<NoneValue, bool, std::int64_t, double, std::string, std::vector<Snapshot>, OpaqueObject>;
    Node value;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

[[nodiscard]] Snapshot take_snapshot(const Value& value);

// True if the snapshot can be spelled as a literal whose equality check
// reproduces it exactly (no opaque objects, only finite floats).
[[nodiscard]] bool is_literal_snapshot(const Snapshot& snapshot);

// The subject language's `==` on snapshots (numeric tower, element-wise lists).
[[nodiscard]] bool snapshots_equal(const Snapshot& a, const Snapshot& b);

// Whether an assertion built from `expected` would accept `actual`: a float
// expectation within `float_tolerance`, anything else by `==`.
[[nodiscard]] bool same_observation(const Snapshot& expected, const Snapshot& actual, double float_tolerance);

enum class ObservationKind { Value, Attribute };

struct Observation {
    std::size_t statement = 0;  // taken right after this statement
    ObservationKind kind = ObservationKind::Value;
    std::size_t variable = 0;
    std::string attribute;
    Snapshot value;
};

struct BranchDistances {
    double true_distance = 0.0;
    double false_distance = 0.0;
};

struct ExecutionTrace {
    std::set<lang::LineNo> lines_hit;
    std::map<lang::PredicateId, BranchDistances> branch_results;  // min over all evaluations
    std::set<std::string> calls_entered;
    std::vector<Observation> observations;

    void record(lang::PredicateId id, const PredicateOutcome& outcome);
    // Union with min-aggregation; observations are not merged.
    void merge(const ExecutionTrace& other);
};

}  // namespace testgen::interp
