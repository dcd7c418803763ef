#include "testgen/testcase/test_case.hpp"

#include <algorithm>

namespace testgen::testcase {

namespace {

// Visits every variable reference of a (possibly const) statement, receiver first.
template <typename S, typename F>
void for_each_reference(S& statement, F&& f)
{
    std::visit(
        [&](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ListStatement>) {
                for (auto& r : s.elements) f(r);
            } else if constexpr (std::is_same_v<T, MethodStatement>) {
                f(s.receiver);
                for (auto& r : s.args) f(r);
            } else if constexpr (!std::is_same_v<T, PrimitiveStatement>) {
                for (auto& r : s.args) f(r);
            }
        },
        statement);
}

}  // namespace

std::vector<VarRef> references(const Statement& statement)
{
    std::vector<VarRef> out;
    for_each_reference(statement, [&](VarRef r) { out.push_back(r); });
    return out;
}

std::vector<VarRef*> mutable_references(Statement& statement)
{
    std::vector<VarRef*> out;
    for_each_reference(statement, [&](VarRef& r) { out.push_back(&r); });
    return out;
}

bool is_call(const Statement& statement)
{
    return std::holds_alternative<FunctionStatement>(statement) || std::holds_alternative<MethodStatement>(statement);
}

std::string static_type(const TestCase& test, VarRef var, const analysis::TestCluster& cluster)
{
    const Statement& s = test.statements.at(var);
    if (const auto* p = std::get_if<PrimitiveStatement>(&s)) {
        static constexpr const char* names[] = {"none", "bool", "int", "float", "str"};
        return names[p->value.index()];
    }
    if (std::holds_alternative<ListStatement>(s)) {
        return "list";
    }
    std::size_t callable = 0;
    if (const auto* c = std::get_if<ConstructorStatement>(&s)) callable = c->callable;
    if (const auto* f = std::get_if<FunctionStatement>(&s)) callable = f->callable;
    if (const auto* m = std::get_if<MethodStatement>(&s)) callable = m->callable;
    const auto& ret = cluster.callables.at(callable).return_type;
    return ret ? ret->name : std::string();
}

std::string validate(const TestCase& test, const analysis::TestCluster& cluster, std::size_t max_length)
{
    using analysis::CallableKind;
    if (test.size() > max_length) {
        return "test has " + std::to_string(test.size()) + " statements, cap is " + std::to_string(max_length);
    }
    for (std::size_t i = 0; i < test.size(); ++i) {
        const Statement& s = test.statements[i];
        const std::string where = "statement " + std::to_string(i) + ": ";
        for (VarRef r : references(s)) {
            if (r >= i) return where + "reference to variable " + std::to_string(r) + " before definition";
        }
        const auto check_call = [&](std::size_t callable, std::size_t nargs, CallableKind kind) -> std::string {
            if (callable >= cluster.callables.size()) return where + "unknown callable";
            const auto& c = cluster.callables[callable];
            if (c.kind != kind) return where + "callable kind mismatch for " + c.id();
            if (c.arity() != nargs) return where + "arity mismatch for " + c.id();
            return {};
        };
        std::string problem;
        if (const auto* c = std::get_if<ConstructorStatement>(&s)) {
            problem = check_call(c->callable, c->args.size(), CallableKind::Constructor);
        } else if (const auto* f = std::get_if<FunctionStatement>(&s)) {
            problem = check_call(f->callable, f->args.size(), CallableKind::Function);
        } else if (const auto* m = std::get_if<MethodStatement>(&s)) {
            problem = check_call(m->callable, m->args.size(), CallableKind::Method);
        }
        if (!problem.empty()) return problem;
    }
    for (const auto& a : test.assertions) {
        if (a.statement >= test.size() || a.variable > a.statement) {
            return "assertion refers outside the test";
        }
    }
    return {};
}

void remove_with_dependents(TestCase& test, std::size_t index)
{
    std::vector<bool> removed(test.size(), false);
    removed.at(index) = true;
    for (std::size_t i = index + 1; i < test.size(); ++i) {
        for (VarRef r : references(test.statements[i])) {
            if (removed[r]) {
                removed[i] = true;
                break;
            }
        }
    }
    std::vector<VarRef> renumber(test.size(), 0);
    std::vector<Statement> kept;
    for (std::size_t i = 0; i < test.size(); ++i) {
        if (removed[i]) continue;
        renumber[i] = kept.size();
        kept.push_back(std::move(test.statements[i]));
    }
    for (auto& s : kept) {
        for (VarRef* r : mutable_references(s)) *r = renumber[*r];
    }
    test.statements = std::move(kept);
    test.assertions.clear();
}

}  // namespace testgen::testcase
