#include "testgen/testcase/variation.hpp"

#include <algorithm>
#include <limits>

namespace testgen::testcase {

namespace {

std::int64_t saturating_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return b > 0 ? std::numeric_limits<std::int64_t>::max() : std::numeric_limits<std::int64_t>::min();
    }
    return out;
}

// Variables before `limit` other than `exclude` whose static type is `type`.
std::vector<VarRef> same_typed(const TestCase& test, const std::string& type, std::size_t limit, VarRef exclude,
                               const analysis::TestCluster& cluster)
{
    std::vector<VarRef> out;
    if (type.empty()) return out;
    for (VarRef v = 0; v < limit; ++v) {
        if (v != exclude && static_type(test, v, cluster) == type) out.push_back(v);
    }
    return out;
}

bool remove_statement(TestCase& test, std::size_t index, const analysis::TestCluster& cluster, Rng& rng)
{
    const auto alternatives = same_typed(test, static_type(test, index, cluster), index, index, cluster);
    if (alternatives.empty()) {
        remove_with_dependents(test, index);
        return true;
    }
    const VarRef replacement = alternatives[pick_index(rng, alternatives.size())];
    test.statements.erase(test.statements.begin() + static_cast<std::ptrdiff_t>(index));
    for (std::size_t i = index; i < test.size(); ++i) {
        for (VarRef* r : mutable_references(test.statements[i])) {
            if (*r == index) *r = replacement;
            else if (*r > index) --*r;
        }
    }
    test.assertions.clear();
    return true;
}

bool change_primitive(PrimitiveValue& value, const TestFactory& factory, Rng& rng, const MutationConfig& config)
{
    if (auto* i = std::get_if<std::int64_t>(&value)) {
        const std::int64_t delta = uniform_int(rng, 1, config.int_delta_max);
        *i = saturating_add(*i, coin(rng, 0.5) ? delta : -delta);
        return true;
    }
    if (auto* d = std::get_if<double>(&value)) {
        if (coin(rng, 0.5)) {
            *d += std::uniform_real_distribution<double>(-config.float_delta_max, config.float_delta_max)(rng);
        } else {
            *d = factory.random_float(rng);
        }
        return true;
    }
    if (auto* s = std::get_if<std::string>(&value)) {
        const char c = static_cast<char>('a' + pick_index(rng, 26));
        const std::size_t op = s->empty() ? 0 : pick_index(rng, 3);
        if (op == 0) {
            s->insert(s->begin() + static_cast<std::ptrdiff_t>(pick_index(rng, s->size() + 1)), c);
        } else if (op == 1) {
            s->erase(s->begin() + static_cast<std::ptrdiff_t>(pick_index(rng, s->size())));
        } else {
            (*s)[pick_index(rng, s->size())] = c;
        }
        return true;
    }
    if (auto* b = std::get_if<bool>(&value)) {
        *b = !*b;
        return true;
    }
    return false;
}

bool change_statement(TestCase& test, std::size_t index, const TestFactory& factory, Rng& rng,
                      const MutationConfig& config)
{
    Statement& s = test.statements[index];
    if (auto* p = std::get_if<PrimitiveStatement>(&s)) {
        return change_primitive(p->value, factory, rng, config);
    }
    auto refs = mutable_references(s);
    if (refs.empty()) return false;
    const std::size_t which = pick_index(rng, refs.size());
    const VarRef current = *refs[which];
    const auto alternatives =
        same_typed(test, static_type(test, current, factory.cluster()), index, current, factory.cluster());

    // A primitive argument may also be split off into a mutated private copy,
    // so arguments sharing one variable can move apart.
    const auto* primitive = std::get_if<PrimitiveStatement>(&test.statements[current]);
    const bool can_copy = primitive && test.size() < factory.config().max_length;
    if (can_copy && (alternatives.empty() || coin(rng, 0.5))) {
        PrimitiveStatement copy = *primitive;
        if (!change_primitive(copy.value, factory, rng, config)) return false;
        test.statements.insert(test.statements.begin() + static_cast<std::ptrdiff_t>(index), copy);
        for (std::size_t i = index + 1; i < test.size(); ++i) {
            for (VarRef* r : mutable_references(test.statements[i])) {
                if (*r >= index) ++*r;
            }
        }
        *mutable_references(test.statements[index + 1])[which] = index;
        return true;
    }
    if (alternatives.empty()) return false;
    *refs[which] = alternatives[pick_index(rng, alternatives.size())];
    return true;
}

// x[:cx] followed by y[cy:] and the statements of y[:cy] it transitively needs.
TestCase splice(const TestCase& x, std::size_t cx, const TestCase& y, std::size_t cy)
{
    std::vector<bool> needed(y.size(), false);
    for (std::size_t i = y.size(); i-- > 0;) {
        if (i >= cy) needed[i] = true;
        if (!needed[i]) continue;
        for (VarRef r : references(y.statements[i])) needed[r] = true;
    }
    TestCase out;
    out.statements.assign(x.statements.begin(), x.statements.begin() + static_cast<std::ptrdiff_t>(cx));
    std::vector<VarRef> renumber(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!needed[i]) continue;
        Statement s = y.statements[i];
        for (VarRef* r : mutable_references(s)) *r = renumber[*r];
        renumber[i] = out.size();
        out.statements.push_back(std::move(s));
    }
    return out;
}

}  // namespace

bool apply_mutation(TestCase& test, MutationKind kind, const TestFactory& factory, Rng& rng,
                    const MutationConfig& config)
{
    const auto& cluster = factory.cluster();
    switch (kind) {
    case MutationKind::Insert: {
        if (cluster.accessible.empty()) return false;
        const std::size_t callable = cluster.accessible[pick_index(rng, cluster.accessible.size())];
        return factory.insert_call(test, callable, pick_index(rng, test.size() + 1), rng);
    }
    case MutationKind::Remove:
        if (test.empty()) return false;
        return remove_statement(test, pick_index(rng, test.size()), cluster, rng);
    case MutationKind::Change:
        if (test.empty()) return false;
        return change_statement(test, pick_index(rng, test.size()), factory, rng, config);
    }
    return false;
}

TestCase mutate(const TestCase& test, const TestFactory& factory, Rng& rng, const MutationConfig& config)
{
    constexpr MutationKind kinds[] = {MutationKind::Insert, MutationKind::Remove, MutationKind::Change};
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        TestCase candidate = test;
        candidate.assertions.clear();
        const MutationKind kind = kinds[pick_index(rng, 3)];
        if (apply_mutation(candidate, kind, factory, rng, config) && candidate.statements != test.statements) {
            return candidate;
        }
    }
    TestCase unchanged = test;
    unchanged.assertions.clear();
    return unchanged;
}

std::pair<TestCase, TestCase> crossover(const TestCase& a, const TestCase& b, Rng& rng, std::size_t max_length)
{
    if (a.empty() || b.empty()) {
        return {a, b};
    }
    const double point = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto ca = static_cast<std::size_t>(point * static_cast<double>(a.size()));
    const auto cb = static_cast<std::size_t>(point * static_cast<double>(b.size()));
    TestCase first = splice(a, ca, b, cb);
    TestCase second = splice(b, cb, a, ca);
    if (first.size() > max_length) first = a;
    if (second.size() > max_length) second = b;
    first.assertions.clear();
    second.assertions.clear();
    return {std::move(first), std::move(second)};
}

std::pair<TestSuiteChromosome, TestSuiteChromosome>
crossover(const TestSuiteChromosome& a, const TestSuiteChromosome& b, Rng& rng)
{
    const std::size_t cut = pick_index(rng, std::min(a.size(), b.size()) + 1);
    return crossover_at(a, b, cut);
}

std::pair<TestSuiteChromosome, TestSuiteChromosome>
crossover_at(const TestSuiteChromosome& a, const TestSuiteChromosome& b, std::size_t cut)
{
    cut = std::min({cut, a.size(), b.size()});
    TestSuiteChromosome first;
    TestSuiteChromosome second;
    const auto take = [](TestSuiteChromosome& out, const TestSuiteChromosome& head, const TestSuiteChromosome& tail,
                         std::size_t c) {
        out.tests.assign(head.tests.begin(), head.tests.begin() + static_cast<std::ptrdiff_t>(c));
        out.tests.insert(out.tests.end(), tail.tests.begin() + static_cast<std::ptrdiff_t>(c), tail.tests.end());
    };
    take(first, a, b, cut);
    take(second, b, a, cut);
    return {std::move(first), std::move(second)};
}

}  // namespace testgen::testcase
