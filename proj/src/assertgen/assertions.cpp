#include "testgen/assertgen/assertions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace testgen::assertgen {

namespace {

using Key = std::tuple<std::size_t, interp::ObservationKind, std::size_t, std::string>;

Key key_of(const interp::Observation& o)
{
    return {o.statement, o.kind, o.variable, o.attribute};
}

// Whether `assertion`, checked after its statement, rejects the given run.
bool fails_on(const Assertion& assertion, const interp::ExecutionResult& run)
{
    const std::size_t completed = run.first_failure().value_or(run.outcomes.size());
    if (assertion.statement >= completed) return true;
    const auto kind = assertion.kind == AssertionKind::AttributeEquals ? interp::ObservationKind::Attribute
                                                                       : interp::ObservationKind::Value;
    const Key wanted{assertion.statement, kind, assertion.variable, assertion.attribute};
    for (const auto& o : run.trace.observations) {
        if (key_of(o) == wanted) return !holds(assertion, o.value);
    }
    return true;
}

}  // namespace

bool holds(const Assertion& assertion, const interp::Snapshot& observed)
{
    return interp::same_observation(assertion.expected, observed, kFloatTolerance);
}

std::size_t AssertionReport::killed() const
{
    return static_cast<std::size_t>(
        std::count_if(kills.begin(), kills.end(), [](const KillRecord& k) { return k.killed_by.has_value(); }));
}

std::vector<std::size_t> diff_observations(const interp::ExecutionResult& original,
                                           const interp::ExecutionResult& mutant)
{
    const auto& theirs = mutant.trace.observations;
    std::map<Key, const interp::Snapshot*> by_key;
    for (const auto& o : theirs) by_key.emplace(key_of(o), &o.value);
    const std::size_t completed = mutant.first_failure().value_or(mutant.outcomes.size());

    std::vector<std::size_t> points;
    const auto& ours = original.trace.observations;
    for (std::size_t i = 0; i < ours.size(); ++i) {
        const auto& o = ours[i];
        if (o.statement >= completed) {
            points.push_back(i);
            continue;
        }
        auto it = by_key.find(key_of(o));
        if (it == by_key.end() || !interp::same_observation(o.value, *it->second, kFloatTolerance)) {
            points.push_back(i);
        }
    }
    return points;
}

std::optional<Assertion> assertion_for(const interp::Observation& observation)
{
    if (!interp::is_literal_snapshot(observation.value)) return std::nullopt;
    Assertion a;
    a.statement = observation.statement;
    a.variable = observation.variable;
    a.expected = observation.value;
    if (observation.kind == interp::ObservationKind::Attribute) {
        a.kind = AssertionKind::AttributeEquals;
        a.attribute = observation.attribute;
    } else if (std::holds_alternative<interp::NoneValue>(observation.value.value)) {
        a.kind = AssertionKind::IsNone;
    } else if (std::holds_alternative<double>(observation.value.value)) {
        a.kind = AssertionKind::FloatApprox;
    } else {
        a.kind = AssertionKind::PrimitiveEquals;
    }
    return a;
}

AssertionReport synthesize_assertions(testcase::TestSuiteChromosome& suite, const analysis::Project& project,
                                      const analysis::TestCluster& cluster, const std::vector<Mutant>& mutants,
                                      const AssertionConfig& config)
{
    AssertionReport report;
    for (const auto& m : mutants) {
        report.kills.push_back({m.id, m.op, m.description, std::nullopt});
    }

    auto original_program =
        std::make_shared<const interp::Program>(project.all_modules(), project.target->name);
    const interp::Executor original(original_program, cluster, config.budget);
    std::vector<interp::Executor> variants;
    variants.reserve(mutants.size());
    for (const auto& m : mutants) {
        std::vector<std::shared_ptr<const lang::AstModule>> modules{m.module};
        modules.insert(modules.end(), project.context.begin(), project.context.end());
        variants.emplace_back(std::make_shared<const interp::Program>(modules, m.module->name), cluster,
                              config.budget);
    }

    std::uint64_t spent = 0;
    const auto over_budget = [&] { return config.max_total_steps > 0 && spent >= config.max_total_steps; };

    for (std::size_t t = 0; t < suite.tests.size(); ++t) {
        auto& test = suite.tests[t].test;
        test.assertions.clear();
        if (over_budget()) {
            report.incomplete = true;
            break;
        }
        const auto base = original.execute(test, true);
        spent += base.steps;
        if (!base.ok()) {
            ++report.skipped_tests;
            continue;
        }
        std::vector<std::pair<Assertion, std::size_t>> found;  // with generating mutant
        for (std::size_t m = 0; m < variants.size(); ++m) {
            if (over_budget()) {
                report.incomplete = true;
                break;
            }
            const auto run = variants[m].execute(test, true);
            spent += run.steps;
            const auto points = diff_observations(base, run);
            bool killed = !run.ok();
            for (std::size_t p : points) {
                auto assertion = assertion_for(base.trace.observations[p]);
                if (!assertion) continue;
                auto same = std::find_if(found.begin(), found.end(),
                                         [&](const auto& f) { return same_check(f.first, *assertion); });
                if (same != found.end()) {
                    // The kept twin may sit at a statement where this mutant still agrees.
                    if (!fails_on(same->first, run)) continue;
                } else {
                    found.emplace_back(std::move(*assertion), m);
                }
                killed = true;
                break;
            }
            if (killed && !report.kills[m].killed_by) {
                report.kills[m].killed_by = t;
            }
        }
        std::stable_sort(found.begin(), found.end(),
                         [](const auto& a, const auto& b) { return a.first.statement < b.first.statement; });
        report.assertions += found.size();
        for (auto& [assertion, mutant] : found) {
            report.origins.push_back({t, test.assertions.size(), mutants[mutant].id});
            test.assertions.push_back(std::move(assertion));
        }
    }
    return report;
}

}  // namespace testgen::assertgen
