#include "testgen/interp/trace.hpp"

#include <algorithm>
#include <cmath>

namespace testgen::interp {

namespace {

constexpr int kMaxSnapshotDepth = 16;

Snapshot snapshot_at(const Value& value, int depth)
{
    return std::visit(
        [&](const auto& v) -> Snapshot {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ListPtr>) {
                if (depth >= kMaxSnapshotDepth) {
                    return {OpaqueObject{"list"}};
                }
                std::vector<Snapshot> items;
                items.reserve(v->items.size());
                for (const auto& item : v->items) {
                    items.push_back(snapshot_at(item, depth + 1));
                }
                return {std::move(items)};
            } else if constexpr (std::is_same_v<T, InstancePtr> || std::is_same_v<T, CallablePtr>) {
                return {OpaqueObject{type_name(value)}};
            } else {
                return {v};
            }
        },
        value);
}

}  // namespace

Snapshot take_snapshot(const Value& value)
{
    return snapshot_at(value, 0);
}

bool is_literal_snapshot(const Snapshot& snapshot)
{
    if (std::holds_alternative<OpaqueObject>(snapshot.value)) return false;
    if (const auto* d = std::get_if<double>(&snapshot.value)) return std::isfinite(*d);
    if (const auto* items = std::get_if<std::vector<Snapshot>>(&snapshot.value)) {
        return std::all_of(items->begin(), items->end(), [](const Snapshot& s) { return is_literal_snapshot(s); });
    }
    return true;
}

bool snapshots_equal(const Snapshot& a, const Snapshot& b)
{
    const auto numeric = [](const Snapshot& s) {
        return std::holds_alternative<bool>(s.value) || std::holds_alternative<std::int64_t>(s.value)
               || std::holds_alternative<double>(s.value);
    };
    const auto as_double = [](const Snapshot& s) {
        if (const auto* b = std::get_if<bool>(&s.value)) return *b ? 1.0 : 0.0;
        if (const auto* i = std::get_if<std::int64_t>(&s.value)) return static_cast<double>(*i);
        return std::get<double>(s.value);
    };
    const auto as_int = [](const Snapshot& s) -> std::int64_t {
        if (const auto* b = std::get_if<bool>(&s.value)) return *b ? 1 : 0;
        return std::get<std::int64_t>(s.value);
    };
    if (numeric(a) && numeric(b)) {
        if (!std::holds_alternative<double>(a.value) && !std::holds_alternative<double>(b.value)) {
            return as_int(a) == as_int(b);
        }
        return as_double(a) == as_double(b);
    }
    if (a.value.index() != b.value.index()) return false;
    if (const auto* items = std::get_if<std::vector<Snapshot>>(&a.value)) {
        const auto& other = std::get<std::vector<Snapshot>>(b.value);
        if (items->size() != other.size()) return false;
        for (std::size_t i = 0; i < items->size(); ++i) {
            if (!snapshots_equal((*items)[i], other[i])) return false;
        }
        return true;
    }
    return a == b;
}

bool same_observation(const Snapshot& expected, const Snapshot& actual, double float_tolerance)
{
    const auto* x = std::get_if<double>(&expected.value);
    if (!x) return snapshots_equal(expected, actual);
    if (std::isnan(*x)) {
        const auto* y = std::get_if<double>(&actual.value);
        return y && std::isnan(*y);
    }
    double y = 0.0;
    if (const auto* d = std::get_if<double>(&actual.value)) y = *d;
    else if (const auto* i = std::get_if<std::int64_t>(&actual.value)) y = static_cast<double>(*i);
    else if (const auto* b = std::get_if<bool>(&actual.value)) y = *b ? 1.0 : 0.0;
    else return false;
    if (std::isinf(*x) || std::isinf(y)) return *x == y;
    return std::fabs(*x - y) <= float_tolerance;
}

void ExecutionTrace::record(lang::PredicateId id, const PredicateOutcome& outcome)
{
    auto [it, inserted] = branch_results.try_emplace(id, BranchDistances{outcome.true_distance, outcome.false_distance});
    if (!inserted) {
        it->second.true_distance = std::min(it->second.true_distance, outcome.true_distance);
        it->second.false_distance = std::min(it->second.false_distance, outcome.false_distance);
    }
}

void ExecutionTrace::merge(const ExecutionTrace& other)
{
    lines_hit.insert(other.lines_hit.begin(), other.lines_hit.end());
    calls_entered.insert(other.calls_entered.begin(), other.calls_entered.end());
    for (const auto& [id, d] : other.branch_results) {
        record(id, PredicateOutcome{false, d.true_distance, d.false_distance});
    }
}

}  // namespace testgen::interp
