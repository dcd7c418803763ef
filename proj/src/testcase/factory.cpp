#include "testgen/testcase/factory.hpp"

#include <algorithm>

namespace testgen::testcase {

namespace {

struct TooLong {};

constexpr std::int64_t kBoundaryInts[] = {0, 1, -1};
constexpr double kBoundaryFloats[] = {0.0, 1.0, -1.0};

}  // namespace

// Statements under construction, appended to a copy of the test prefix so
// static types of earlier variables stay visible.
class TestFactory::Fragment {
public:
    Fragment(const TestFactory& factory, TestCase prefix, std::size_t room, Rng& rng)
        : factory_(factory), cluster_(factory.cluster_), work_(std::move(prefix)), limit_(work_.size() + room),
          rng_(rng)
    {
    }

    TestCase take() { return std::move(work_); }
    std::size_t size() const { return work_.size(); }

    VarRef call(std::size_t callable, int depth)
    {
        const auto& c = cluster_.callables.at(callable);
        std::optional<VarRef> receiver;
        if (c.kind == analysis::CallableKind::Method) {
            receiver = value_of_type(c.owner, {}, depth + 1);
        }
        std::vector<VarRef> args;
        for (const auto& p : c.params) {
            args.push_back(value_for(p.type, depth + 1));
        }
        switch (c.kind) {
        case analysis::CallableKind::Function: return add(FunctionStatement{callable, std::move(args)});
        case analysis::CallableKind::Constructor: return add(ConstructorStatement{callable, std::move(args)});
        case analysis::CallableKind::Method: return add(MethodStatement{*receiver, callable, std::move(args)});
        }
        return add(PrimitiveStatement{NoneValue{}});
    }

private:
    VarRef add(Statement s)
    {
        if (work_.size() >= limit_) throw TooLong{};
        work_.statements.push_back(std::move(s));
        return work_.size() - 1;
    }

    VarRef value_for(const std::optional<analysis::DeclaredType>& declared, int depth)
    {
        const analysis::TypeInfo type = analysis::candidates_for_type(cluster_, declared, rng_);
        const std::string element = declared && declared->name == type.name ? declared->element : std::string();
        return value_of_type(type.name, element, depth);
    }

    VarRef value_of_type(const std::string& type, const std::string& element, int depth)
    {
        if (coin(rng_, factory_.config_.reuse_probability)) {
            std::vector<VarRef> fitting;
            for (VarRef v = 0; v < work_.size(); ++v) {
                if (static_type(work_, v, cluster_) == type) fitting.push_back(v);
            }
            if (!fitting.empty()) {
                return fitting[pick_index(rng_, fitting.size())];
            }
        }
        if (depth > factory_.config_.max_recursion) {
            return add(PrimitiveStatement{NoneValue{}});
        }
        if (type == "list") {
            const std::size_t n = pick_index(rng_, factory_.config_.max_list_length + 1);
            std::vector<VarRef> items;
            if (n > 0) {
                std::optional<analysis::DeclaredType> element_type;
                if (!element.empty()) element_type = analysis::DeclaredType{element, {}};
                const analysis::TypeInfo chosen = analysis::candidates_for_type(cluster_, element_type, rng_);
                for (std::size_t i = 0; i < n; ++i) {
                    items.push_back(value_of_type(chosen.name, {}, depth + 1));
                }
            }
            return add(ListStatement{std::move(items)});
        }
        const analysis::TypeEntry* entry = cluster_.find_type(type);
        if (entry && entry->constructor) {
            return call(*entry->constructor, depth);
        }
        return add(PrimitiveStatement{factory_.random_primitive(type, rng_)});
    }

    const TestFactory& factory_;
    const analysis::TestCluster& cluster_;
    TestCase work_;
    std::size_t limit_;
    Rng& rng_;
};

TestFactory::TestFactory(const analysis::TestCluster& cluster, FactoryConfig config)
    : cluster_(cluster), config_(config)
{
}

bool TestFactory::insert_call(TestCase& test, std::size_t callable, std::size_t position, Rng& rng) const
{
    position = std::min(position, test.size());
    if (test.size() >= config_.max_length) {
        return false;
    }
    TestCase prefix;
    prefix.statements.assign(test.statements.begin(), test.statements.begin() + static_cast<std::ptrdiff_t>(position));
    Fragment fragment(*this, std::move(prefix), config_.max_length - test.size(), rng);
    try {
        fragment.call(callable, 0);
    } catch (const TooLong&) {
        return false;
    }
    TestCase result = fragment.take();
    const std::size_t shift = result.size() - position;
    for (std::size_t i = position; i < test.size(); ++i) {
        Statement s = test.statements[i];
        for (VarRef* r : mutable_references(s)) {
            if (*r >= position) *r += shift;
        }
        result.statements.push_back(std::move(s));
    }
    test.statements = std::move(result.statements);
    test.assertions.clear();
    return true;
}

bool TestFactory::append_call(TestCase& test, std::size_t callable, Rng& rng) const
{
    return insert_call(test, callable, test.size(), rng);
}

TestCase TestFactory::sample_random_test_case(Rng& rng) const
{
    if (cluster_.accessible.empty()) {
        return {};
    }
    for (int attempt = 0; attempt < 10; ++attempt) {
        TestCase test;
        const std::size_t callable = cluster_.accessible[pick_index(rng, cluster_.accessible.size())];
        if (append_call(test, callable, rng)) {
            return test;
        }
    }
    return {};
}

PrimitiveValue TestFactory::random_primitive(const std::string& type, Rng& rng) const
{
    if (type == "int") return random_int(rng);
    if (type == "float") return random_float(rng);
    if (type == "str") return random_string(rng);
    if (type == "bool") return coin(rng, 0.5);
    return NoneValue{};
}

std::int64_t TestFactory::random_int(Rng& rng) const
{
    if (coin(rng, config_.boundary_probability)) {
        return kBoundaryInts[pick_index(rng, std::size(kBoundaryInts))];
    }
    return uniform_int(rng, config_.int_min, config_.int_max);
}

double TestFactory::random_float(Rng& rng) const
{
    if (coin(rng, config_.boundary_probability)) {
        return kBoundaryFloats[pick_index(rng, std::size(kBoundaryFloats))];
    }
    return std::uniform_real_distribution<double>(config_.float_min, config_.float_max)(rng);
}

std::string TestFactory::random_string(Rng& rng) const
{
    const std::size_t n = pick_index(rng, config_.max_string_length + 1);
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(static_cast<char>('a' + pick_index(rng, 26)));
    }
    return s;
}

}  // namespace testgen::testcase
