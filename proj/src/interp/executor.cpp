#include "testgen/interp/executor.hpp"

#include <stdexcept>

namespace testgen::interp {

namespace {

using namespace testgen::testcase;

class TraceRecorder final : public ExecutionListener {
public:
    explicit TraceRecorder(ExecutionTrace& trace) : trace_(trace) {}

    void on_line(lang::LineNo line) override { trace_.lines_hit.insert(line); }
    void on_predicate(lang::PredicateId id, const PredicateOutcome& outcome) override { trace_.record(id, outcome); }
    void on_call(const std::string& callable_id) override { trace_.calls_entered.insert(callable_id); }

private:
    ExecutionTrace& trace_;
};

Value to_value(const PrimitiveValue& primitive)
{
    return std::visit(
        [](const auto& v) -> Value {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, testcase::NoneValue>) {
                return interp::NoneValue{};
            } else {
                return v;
            }
        },
        primitive);
}

void observe_after(std::size_t index, const Statement& statement, const std::vector<Value>& vars,
                   std::vector<Observation>& out)
{
    for (std::size_t j = 0; j <= index; ++j) {
        const Value& value = vars[j];
        if (const auto* instance = std::get_if<InstancePtr>(&value)) {
            for (const auto& [name, attr] : (*instance)->attributes) {
                out.push_back({index, ObservationKind::Attribute, j, name, take_snapshot(attr)});
            }
            continue;
        }
        const bool fresh_result = j == index && is_call(statement);
        const bool list_var = j < index && std::holds_alternative<ListPtr>(value);
        if (fresh_result || list_var) {
            out.push_back({index, ObservationKind::Value, j, {}, take_snapshot(value)});
        }
    }
}

}  // namespace

bool ExecutionResult::ok() const
{
    return !first_failure().has_value();
}

std::optional<std::size_t> ExecutionResult::first_failure() const
{
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].status != OutcomeStatus::Ok) return i;
    }
    return std::nullopt;
}

Executor::Executor(std::shared_ptr<const Program> program, const analysis::TestCluster& cluster, Budget budget)
    : program_(std::move(program)), cluster_(&cluster), budget_(budget)
{
    if (budget_.max_steps == 0) {
        throw std::invalid_argument("step budget must be positive");
    }
    const ModuleScope* target = program_->target();
    resolved_.resize(cluster.callables.size());
    for (std::size_t i = 0; i < cluster.callables.size(); ++i) {
        const auto& callable = cluster.callables[i];
        if (callable.kind == analysis::CallableKind::Method || !target) continue;
        if (const Value* v = program_->lookup_path(*target, callable.access_path)) {
            resolved_[i] = *v;
        }
    }
}

ExecutionResult Executor::execute(const TestCase& test, bool observe) const
{
    return run(test, observe, nullptr, true);
}

ExecutionResult Executor::execute_plain(const TestCase& test, ExecutionListener& listener) const
{
    return run(test, false, &listener, false);
}

ExecutionResult Executor::run(const TestCase& test, bool observe, ExecutionListener* listener, bool distances) const
{
    ExecutionResult result;
    TraceRecorder recorder(result.trace);
    InterpreterOptions options;
    options.max_steps = budget_.max_steps;
    options.compute_distances = distances;
    Interpreter interpreter(*program_, options, listener ? listener : &recorder);

    std::vector<Value> vars;
    vars.reserve(test.size());
    const auto arguments = [&](const std::vector<VarRef>& refs) {
        std::vector<Value> args;
        args.reserve(refs.size());
        for (VarRef r : refs) args.push_back(vars.at(r));
        return args;
    };
    const auto resolved = [&](std::size_t callable) -> const Value& {
        const auto& v = resolved_.at(callable);
        if (!v) {
            throw RuntimeError(ErrorKind::NameError,
                               "name '" + cluster_->callables.at(callable).access_path + "' is not defined");
        }
        return *v;
    };

    for (std::size_t i = 0; i < test.size(); ++i) {
        const Statement& statement = test.statements[i];
        StatementOutcome outcome;
        Value value = NoneValue{};
        try {
            value = std::visit(
                [&](const auto& s) -> Value {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, PrimitiveStatement>) {
                        return to_value(s.value);
                    } else if constexpr (std::is_same_v<T, ListStatement>) {
                        auto list = std::make_shared<ListObject>();
                        list->items = arguments(s.elements);
                        return list;
                    } else if constexpr (std::is_same_v<T, MethodStatement>) {
                        const Value method =
                            interpreter.get_attribute(vars.at(s.receiver), cluster_->callables.at(s.callable).name);
                        return interpreter.call(method, arguments(s.args));
                    } else {
                        return interpreter.call(resolved(s.callable), arguments(s.args));
                    }
                },
                statement);
        } catch (const RuntimeError& e) {
            outcome.status = OutcomeStatus::RuntimeError;
            outcome.error = e.kind();
            outcome.message = e.what();
        } catch (const BudgetExhausted& e) {
            outcome.status = OutcomeStatus::BudgetExhausted;
            outcome.message = e.what();
        }
        result.outcomes.push_back(outcome);
        if (outcome.status != OutcomeStatus::Ok) {
            result.value_types.emplace_back();
            break;
        }
        result.value_types.push_back(type_name(value));
        vars.push_back(std::move(value));
        if (observe) {
            observe_after(i, statement, vars, result.trace.observations);
        }
    }
    result.steps = interpreter.steps();
    return result;
}

ExecutionResult execute_test(const TestCase& test, std::shared_ptr<const Program> program,
                             const analysis::TestCluster& cluster, Budget budget, bool observe)
{
    return Executor(std::move(program), cluster, budget).execute(test, observe);
}

}  // namespace testgen::interp
