#include "testgen/interp/distance.hpp"

#include <algorithm>
#include <cmath>

namespace testgen::interp {

namespace {

using lang::BinaryOp;

bool is_integral(const Value& v)
{
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<bool>(v);
}

__int128 as_wide(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    return std::get<bool>(v) ? 1 : 0;
}

// Forces the taken side to 0 and keeps the untaken side strictly positive
// even when float arithmetic produced NaN.
PredicateOutcome settle(bool taken, double t, double f)
{
    PredicateOutcome out;
    out.taken = taken;
    if (taken) {
        out.true_distance = 0.0;
        out.false_distance = (std::isnan(f) || f <= 0.0) ? kBranchConstant : f;
    } else {
        out.false_distance = 0.0;
        out.true_distance = (std::isnan(t) || t <= 0.0) ? kBranchConstant : t;
    }
    return out;
}

// Distances for lhs OP rhs over integers, exact thanks to 128-bit arithmetic.
PredicateOutcome integral(BinaryOp op, __int128 a, __int128 b)
{
    const auto k = static_cast<__int128>(kBranchConstant);
    const auto d = [](__int128 x) { return static_cast<double>(x); };
    switch (op) {
    case BinaryOp::Eq: return settle(a == b, d(a > b ? a - b : b - a), d(k));
    case BinaryOp::Ne: return settle(a != b, d(k), d(a > b ? a - b : b - a));
    case BinaryOp::Lt: return settle(a < b, d(a - b + k), d(b - a));
    case BinaryOp::Le: return settle(a <= b, d(a - b), d(b - a + k));
    case BinaryOp::Gt: return settle(a > b, d(b - a + k), d(a - b));
    case BinaryOp::Ge: return settle(a >= b, d(b - a), d(a - b + k));
    default: break;
    }
    return {};
}

PredicateOutcome floating(BinaryOp op, double a, double b)
{
    const double k = kBranchConstant;
    switch (op) {
    case BinaryOp::Eq: return settle(a == b, std::fabs(a - b), k);
    case BinaryOp::Ne: return settle(a != b, k, std::fabs(a - b));
    case BinaryOp::Lt: return settle(a < b, a - b + k, b - a);
    case BinaryOp::Le: return settle(a <= b, a - b, b - a + k);
    case BinaryOp::Gt: return settle(a > b, b - a + k, a - b);
    case BinaryOp::Ge: return settle(a >= b, b - a, a - b + k);
    default: break;
    }
    return {};
}

}  // namespace

PredicateOutcome relational_distance(BinaryOp op, const Value& lhs, const Value& rhs)
{
    if (is_integral(lhs) && is_integral(rhs)) {
        return integral(op, as_wide(lhs), as_wide(rhs));
    }
    if (is_numeric(lhs) && is_numeric(rhs)) {
        return floating(op, as_double(lhs), as_double(rhs));
    }
    bool taken = false;
    switch (op) {
    case BinaryOp::Eq: taken = values_equal(lhs, rhs); break;
    case BinaryOp::Ne: taken = !values_equal(lhs, rhs); break;
    case BinaryOp::Lt: taken = compare_values(lhs, rhs) == -1; break;
    case BinaryOp::Le: {
        const int c = compare_values(lhs, rhs);
        taken = c == -1 || c == 0;
        break;
    }
    case BinaryOp::Gt: taken = compare_values(lhs, rhs) == 1; break;
    case BinaryOp::Ge: {
        const int c = compare_values(lhs, rhs);
        taken = c == 1 || c == 0;
        break;
    }
    default: break;
    }
    return settle(taken, kBranchConstant, kBranchConstant);
}

PredicateOutcome truthiness_distance(const Value& v)
{
    const bool taken = truthy(v);
    if (is_numeric(v)) {
        return settle(taken, kBranchConstant, std::fabs(as_double(v)));
    }
    return settle(taken, kBranchConstant, kBranchConstant);
}

PredicateOutcome negate(const PredicateOutcome& p)
{
    return PredicateOutcome{!p.taken, p.false_distance, p.true_distance};
}

PredicateOutcome combine_and(const PredicateOutcome& lhs, const PredicateOutcome& rhs)
{
    return settle(lhs.taken && rhs.taken, lhs.true_distance + rhs.true_distance,
                  std::min(lhs.false_distance, rhs.false_distance));
}

PredicateOutcome combine_or(const PredicateOutcome& lhs, const PredicateOutcome& rhs)
{
    return settle(lhs.taken || rhs.taken, std::min(lhs.true_distance, rhs.true_distance),
                  lhs.false_distance + rhs.false_distance);
}

}  // namespace testgen::interp
