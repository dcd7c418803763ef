#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "testgen/interp/distance.hpp"
#include "testgen/interp/program.hpp"

namespace testgen::interp {

// Receives events raised inside the program's target module.
class ExecutionListener {
public:
    virtual ~ExecutionListener() = default;
    virtual void on_line(lang::LineNo /*line*/) {}
    virtual void on_predicate(lang::PredicateId /*id*/, const PredicateOutcome& /*outcome*/) {}
    virtual void on_call(const std::string& /*callable_id*/) {}
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("step budget exhausted") {}
};

struct InterpreterOptions {
    std::uint64_t max_steps = 100'000;
    int max_call_depth = 150;
    // Off for plain re-execution: predicates are then evaluated without the
    // distance bookkeeping (taken flag only).
    bool compute_distances = true;
};

// Tree-walking evaluator. One instance executes one thing at a time; the
// step counter accumulates until reset_steps().
class Interpreter {
public:
    Interpreter(const Program& program, InterpreterOptions options, ExecutionListener* listener = nullptr);

    // Calls any callable value. Throws RuntimeError or BudgetExhausted.
    Value call(const Value& callee, std::vector<Value> args);

    // `object.name` lookup (attributes, then methods). Throws RuntimeError.
    Value get_attribute(const Value& object, const std::string& name);

    [[nodiscard]] std::uint64_t steps() const { return steps_; }
    void reset_steps() { steps_ = 0; }

    // "fn", "Class.method" -- the identity used for root coverage goals.
    [[nodiscard]] static std::string callable_id(const lang::FunctionDef& fn, const ClassInfo* owner);

private:
    struct Frame {
        const ModuleScope* scope = nullptr;
        std::unordered_map<std::string, Value> locals;
    };
    enum class Flow { Normal, Return };

    Value call_function(const FunctionRef& fn, std::vector<Value> args);
    Value instantiate(const ClassInfo& cls, std::vector<Value> args);
    Value call_builtin(Builtin builtin, std::vector<Value>& args);
    Value call_builtin_method(const Value& receiver, BuiltinMethod method, std::vector<Value>& args);

    Flow exec_block(const std::vector<lang::Stmt>& body, Frame& frame, Value& result);
    Flow exec(const lang::Stmt& stmt, Frame& frame, Value& result);
    void assign(const lang::Expr& target, Value value, Frame& frame);

    Value eval(const lang::Expr& expr, Frame& frame);
    Value eval_binary(const lang::Binary& node, Frame& frame);
    Value lookup(const std::string& name, const Frame& frame);
    PredicateOutcome eval_condition(const lang::Expr& expr, Frame& frame);
    PredicateOutcome shadow_condition(const lang::Expr& expr, Frame& frame);

    void step();
    [[nodiscard]] bool traced(const Frame& frame) const { return listener_ && frame.scope->is_target; }

    const Program& program_;
    InterpreterOptions options_;
    ExecutionListener* listener_;
    std::uint64_t steps_ = 0;
    int depth_ = 0;
};

// Binary arithmetic (+ - * / %) with the subject language's semantics.
[[nodiscard]] Value apply_arithmetic(lang::BinaryOp op, const Value& lhs, const Value& rhs);

}  // namespace testgen::interp
