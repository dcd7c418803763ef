#include "testgen/interp/interpreter.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "testgen/lang/render.hpp"
#include "testgen/lang/structure.hpp"

namespace testgen::interp {

namespace {

using lang::BinaryOp;

constexpr std::size_t kMaxSequenceLength = 100'000;

[[noreturn]] void raise(ErrorKind kind, const std::string& message)
{
    throw RuntimeError(kind, message);
}

template <typename T>
Value callable(T target)
{
    auto obj = std::make_shared<CallableObject>();
    obj->target = std::move(target);
    return CallablePtr(std::move(obj));
}

bool is_integral(const Value& v)
{
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<bool>(v);
}

std::int64_t as_int(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    return std::get<bool>(v) ? 1 : 0;
}

std::int64_t checked_int(BinaryOp op, std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    bool overflow = false;
    switch (op) {
    case BinaryOp::Add: overflow = __builtin_add_overflow(a, b, &out); break;
    case BinaryOp::Sub: overflow = __builtin_sub_overflow(a, b, &out); break;
    case BinaryOp::Mul: overflow = __builtin_mul_overflow(a, b, &out); break;
    case BinaryOp::Mod: {
        if (b == 0) raise(ErrorKind::ZeroDivisionError, "integer modulo by zero");
        if (b == -1) return 0;
        out = a % b;
        if (out != 0 && ((out < 0) != (b < 0))) out += b;
        return out;
    }
    default: break;
    }
    if (overflow) {
        raise(ErrorKind::OverflowError, "integer overflow");
    }
    return out;
}

double float_op(BinaryOp op, double a, double b)
{
    switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div:
        if (b == 0.0) raise(ErrorKind::ZeroDivisionError, "division by zero");
        return a / b;
    case BinaryOp::Mod: {
        if (b == 0.0) raise(ErrorKind::ZeroDivisionError, "float modulo");
        double r = std::fmod(a, b);
        if (r != 0.0 && ((r < 0) != (b < 0))) r += b;
        return r;
    }
    default: break;
    }
    return 0.0;
}

Value repeat(const Value& seq, std::int64_t times)
{
    if (times < 0) times = 0;
    if (const auto* s = std::get_if<std::string>(&seq)) {
        if (!s->empty() && static_cast<std::uint64_t>(times) > kMaxSequenceLength / s->size()) {
            raise(ErrorKind::ValueError, "repeated string too long");
        }
        std::string out;
        for (std::int64_t i = 0; i < times; ++i) out += *s;
        return out;
    }
    const auto& items = std::get<ListPtr>(seq)->items;
    if (!items.empty() && static_cast<std::uint64_t>(times) > kMaxSequenceLength / items.size()) {
        raise(ErrorKind::ValueError, "repeated list too long");
    }
    auto out = std::make_shared<ListObject>();
    for (std::int64_t i = 0; i < times; ++i) {
        out->items.insert(out->items.end(), items.begin(), items.end());
    }
    return out;
}

std::size_t normalize_index(const Value& index, std::size_t size)
{
    if (!is_integral(index)) {
        raise(ErrorKind::TypeError, "indices must be integers, not " + type_name(index));
    }
    std::int64_t i = as_int(index);
    if (i < 0) i += static_cast<std::int64_t>(size);
    if (i < 0 || static_cast<std::uint64_t>(i) >= size) {
        raise(ErrorKind::IndexError, "index out of range");
    }
    return static_cast<std::size_t>(i);
}

void expect_arity(const std::string& what, std::size_t expected, std::size_t got)
{
    if (expected != got) {
        raise(ErrorKind::TypeError, what + " takes " + std::to_string(expected) + " argument(s) but "
                                        + std::to_string(got) + " were given");
    }
}

const std::string& expect_str(const Value& v, const char* what)
{
    const auto* s = std::get_if<std::string>(&v);
    if (!s) {
        raise(ErrorKind::TypeError, std::string(what) + " expects a str, got " + type_name(v));
    }
    return *s;
}

}  // namespace

Value apply_arithmetic(BinaryOp op, const Value& lhs, const Value& rhs)
{
    if (is_integral(lhs) && is_integral(rhs)) {
        if (op == BinaryOp::Div) {
            const auto b = as_int(rhs);
            if (b == 0) raise(ErrorKind::ZeroDivisionError, "division by zero");
            return static_cast<double>(as_int(lhs)) / static_cast<double>(b);
        }
        return checked_int(op, as_int(lhs), as_int(rhs));
    }
    if (is_numeric(lhs) && is_numeric(rhs)) {
        return float_op(op, as_double(lhs), as_double(rhs));
    }
    if (op == BinaryOp::Add) {
        if (const auto* a = std::get_if<std::string>(&lhs)) {
            if (const auto* b = std::get_if<std::string>(&rhs)) {
                if (a->size() + b->size() > kMaxSequenceLength) {
                    raise(ErrorKind::ValueError, "string too long");
                }
                return *a + *b;
            }
        }
        if (const auto* a = std::get_if<ListPtr>(&lhs)) {
            if (const auto* b = std::get_if<ListPtr>(&rhs)) {
                if ((*a)->items.size() + (*b)->items.size() > kMaxSequenceLength) {
                    raise(ErrorKind::ValueError, "list too long");
                }
                auto out = std::make_shared<ListObject>();
                out->items = (*a)->items;
                out->items.insert(out->items.end(), (*b)->items.begin(), (*b)->items.end());
                return out;
            }
        }
    }
    if (op == BinaryOp::Mul) {
        const bool lseq = std::holds_alternative<std::string>(lhs) || std::holds_alternative<ListPtr>(lhs);
        const bool rseq = std::holds_alternative<std::string>(rhs) || std::holds_alternative<ListPtr>(rhs);
        if (lseq && is_integral(rhs)) return repeat(lhs, as_int(rhs));
        if (rseq && is_integral(lhs)) return repeat(rhs, as_int(lhs));
    }
    raise(ErrorKind::TypeError, std::string("unsupported operand type(s) for ") + lang::to_token(op) + ": '"
                                    + type_name(lhs) + "' and '" + type_name(rhs) + "'");
}

Interpreter::Interpreter(const Program& program, InterpreterOptions options, ExecutionListener* listener)
    : program_(program), options_(options), listener_(listener)
{
}

std::string Interpreter::callable_id(const lang::FunctionDef& fn, const ClassInfo* owner)
{
    return owner ? owner->def->name + "." + fn.name : fn.name;
}

void Interpreter::step()
{
    if (++steps_ > options_.max_steps) {
        throw BudgetExhausted();
    }
}

Value Interpreter::call(const Value& callee, std::vector<Value> args)
{
    const auto* ptr = std::get_if<CallablePtr>(&callee);
    if (!ptr) {
        raise(ErrorKind::TypeError, "'" + type_name(callee) + "' object is not callable");
    }
    const CallableObject& obj = **ptr;
    if (const auto* fn = std::get_if<FunctionRef>(&obj.target)) {
        return call_function(*fn, std::move(args));
    }
    if (const auto* bound = std::get_if<BoundMethod>(&obj.target)) {
        args.insert(args.begin(), Value(bound->self));
        return call_function(bound->function, std::move(args));
    }
    if (const auto* cls = std::get_if<ClassRef>(&obj.target)) {
        return instantiate(*cls->cls, std::move(args));
    }
    if (const auto* builtin = std::get_if<BuiltinFunctionRef>(&obj.target)) {
        return call_builtin(builtin->builtin, args);
    }
    if (const auto* method = std::get_if<BoundBuiltin>(&obj.target)) {
        return call_builtin_method(method->receiver, method->method, args);
    }
    raise(ErrorKind::TypeError, "'module' object is not callable");
}

Value Interpreter::call_function(const FunctionRef& fn, std::vector<Value> args)
{
    expect_arity(fn.def->name + "()", fn.def->params.size(), args.size());
    if (depth_ >= options_.max_call_depth) {
        raise(ErrorKind::RecursionError, "maximum recursion depth exceeded");
    }
    step();
    Frame frame;
    frame.scope = fn.scope;
    for (std::size_t i = 0; i < args.size(); ++i) {
        frame.locals[fn.def->params[i].name] = std::move(args[i]);
    }
    if (traced(frame)) {
        listener_->on_call(callable_id(*fn.def, fn.owner));
    }
    struct DepthGuard {
        int& depth;
        explicit DepthGuard(int& d) : depth(d) { ++depth; }
        ~DepthGuard() { --depth; }
    } guard(depth_);
    Value result = NoneValue{};
    exec_block(fn.def->body, frame, result);
    return result;
}

Value Interpreter::instantiate(const ClassInfo& cls, std::vector<Value> args)
{
    auto instance = std::make_shared<Instance>();
    instance->cls = &cls;
    if (const auto* init = cls.def->find_method("__init__")) {
        args.insert(args.begin(), Value(instance));
        call_function(FunctionRef{init, cls.scope, &cls}, std::move(args));
    } else {
        expect_arity(cls.def->name + "()", 0, args.size());
        step();
    }
    return instance;
}

Value Interpreter::call_builtin(Builtin builtin, std::vector<Value>& args)
{
    step();
    switch (builtin) {
    case Builtin::Len: {
        expect_arity("len()", 1, args.size());
        if (const auto* s = std::get_if<std::string>(&args[0])) return static_cast<std::int64_t>(s->size());
        if (const auto* l = std::get_if<ListPtr>(&args[0])) return static_cast<std::int64_t>((*l)->items.size());
        raise(ErrorKind::TypeError, "object of type '" + type_name(args[0]) + "' has no len()");
    }
    case Builtin::Abs: {
        expect_arity("abs()", 1, args.size());
        if (is_integral(args[0])) {
            const auto v = as_int(args[0]);
            if (v == std::numeric_limits<std::int64_t>::min()) raise(ErrorKind::OverflowError, "integer overflow");
            return v < 0 ? -v : v;
        }
        if (const auto* d = std::get_if<double>(&args[0])) return std::fabs(*d);
        raise(ErrorKind::TypeError, "bad operand type for abs(): '" + type_name(args[0]) + "'");
    }
    case Builtin::Str: {
        expect_arity("str()", 1, args.size());
        return repr(args[0]);
    }
    case Builtin::Int: {
        expect_arity("int()", 1, args.size());
        if (is_integral(args[0])) return as_int(args[0]);
        if (const auto* d = std::get_if<double>(&args[0])) {
            if (!std::isfinite(*d) || std::fabs(*d) >= 9.2e18) {
                raise(ErrorKind::ValueError, "cannot convert float to int");
            }
            return static_cast<std::int64_t>(std::trunc(*d));
        }
        if (const auto* s = std::get_if<std::string>(&args[0])) {
            errno = 0;
            char* end = nullptr;
            const long long v = std::strtoll(s->c_str(), &end, 10);
            while (end && (*end == ' ' || *end == '\t')) ++end;
            if (s->empty() || errno != 0 || end == s->c_str() || *end != '\0') {
                raise(ErrorKind::ValueError, "invalid literal for int(): " + *s);
            }
            return static_cast<std::int64_t>(v);
        }
        raise(ErrorKind::TypeError, "int() argument must be a string or a number");
    }
    case Builtin::Float: {
        expect_arity("float()", 1, args.size());
        if (is_numeric(args[0])) return as_double(args[0]);
        if (const auto* s = std::get_if<std::string>(&args[0])) {
            char* end = nullptr;
            const double v = std::strtod(s->c_str(), &end);
            while (end && (*end == ' ' || *end == '\t')) ++end;
            if (s->empty() || end == s->c_str() || *end != '\0') {
                raise(ErrorKind::ValueError, "could not convert string to float: " + *s);
            }
            return v;
        }
        raise(ErrorKind::TypeError, "float() argument must be a string or a number");
    }
    }
    raise(ErrorKind::TypeError, "unknown builtin");
}

Value Interpreter::call_builtin_method(const Value& receiver, BuiltinMethod method, std::vector<Value>& args)
{
    step();
    switch (method) {
    case BuiltinMethod::ListAppend: {
        expect_arity("append()", 1, args.size());
        auto& items = std::get<ListPtr>(receiver)->items;
        if (items.size() >= kMaxSequenceLength) raise(ErrorKind::ValueError, "list too long");
        items.push_back(std::move(args[0]));
        return NoneValue{};
    }
    case BuiltinMethod::ListPop: {
        auto& items = std::get<ListPtr>(receiver)->items;
        if (args.size() > 1) expect_arity("pop()", 1, args.size());
        if (items.empty()) raise(ErrorKind::IndexError, "pop from empty list");
        const std::size_t i = args.empty() ? items.size() - 1 : normalize_index(args[0], items.size());
        Value out = std::move(items[i]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
        return out;
    }
    case BuiltinMethod::StrUpper:
    case BuiltinMethod::StrLower: {
        expect_arity(method == BuiltinMethod::StrUpper ? "upper()" : "lower()", 0, args.size());
        std::string s = std::get<std::string>(receiver);
        for (char& c : s) {
            c = static_cast<char>(method == BuiltinMethod::StrUpper ? std::toupper(static_cast<unsigned char>(c))
                                                                     : std::tolower(static_cast<unsigned char>(c)));
        }
        return s;
    }
    case BuiltinMethod::StrStartswith:
    case BuiltinMethod::StrEndswith: {
        expect_arity("startswith()", 1, args.size());
        const auto& s = std::get<std::string>(receiver);
        const auto& p = expect_str(args[0], "startswith()");
        if (p.size() > s.size()) return false;
        return method == BuiltinMethod::StrStartswith ? s.compare(0, p.size(), p) == 0
                                                      : s.compare(s.size() - p.size(), p.size(), p) == 0;
    }
    case BuiltinMethod::StrFind: {
        expect_arity("find()", 1, args.size());
        const auto pos = std::get<std::string>(receiver).find(expect_str(args[0], "find()"));
        return pos == std::string::npos ? std::int64_t{-1} : static_cast<std::int64_t>(pos);
    }
    }
    raise(ErrorKind::TypeError, "unknown method");
}

Interpreter::Flow Interpreter::exec_block(const std::vector<lang::Stmt>& body, Frame& frame, Value& result)
{
    for (const auto& stmt : body) {
        if (exec(stmt, frame, result) == Flow::Return) {
            return Flow::Return;
        }
    }
    return Flow::Normal;
}

Interpreter::Flow Interpreter::exec(const lang::Stmt& stmt, Frame& frame, Value& result)
{
    step();
    if (traced(frame)) {
        listener_->on_line(stmt.span.line);
    }
    return std::visit(
        [&](const auto& node) -> Flow {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, lang::Assign>) {
                assign(node.target, eval(node.value, frame), frame);
            } else if constexpr (std::is_same_v<T, lang::If>) {
                for (std::size_t i = 0; i < node.branches.size(); ++i) {
                    const auto& branch = node.branches[i];
                    if (i > 0 && traced(frame)) {
                        listener_->on_line(branch.span.line);
                    }
                    const PredicateOutcome outcome = eval_condition(branch.condition, frame);
                    if (traced(frame)) {
                        listener_->on_predicate(branch.predicate, outcome);
                    }
                    if (outcome.taken) {
                        return exec_block(branch.body, frame, result);
                    }
                }
                return exec_block(node.orelse, frame, result);
            } else if constexpr (std::is_same_v<T, lang::While>) {
                bool first = true;
                while (true) {
                    if (!first) {
                        step();
                        if (traced(frame)) listener_->on_line(stmt.span.line);
                    }
                    first = false;
                    const PredicateOutcome outcome = eval_condition(node.condition, frame);
                    if (traced(frame)) {
                        listener_->on_predicate(node.predicate, outcome);
                    }
                    if (!outcome.taken) {
                        break;
                    }
                    if (exec_block(node.body, frame, result) == Flow::Return) {
                        return Flow::Return;
                    }
                }
            } else if constexpr (std::is_same_v<T, lang::Return>) {
                result = node.value ? eval(*node.value, frame) : Value(NoneValue{});
                return Flow::Return;
            } else if constexpr (std::is_same_v<T, lang::ExprStmt>) {
                (void)eval(node.expr, frame);
            } else if constexpr (std::is_same_v<T, lang::Assert>) {
                if (!truthy(eval(node.condition, frame))) {
                    raise(ErrorKind::AssertionError, "assertion failed: " + lang::render_expr(node.condition));
                }
            }
            return Flow::Normal;
        },
        stmt.node);
}

void Interpreter::assign(const lang::Expr& target, Value value, Frame& frame)
{
    if (const auto* name = std::get_if<lang::Name>(&target.node)) {
        frame.locals[name->id] = std::move(value);
        return;
    }
    if (const auto* attr = std::get_if<lang::Attribute>(&target.node)) {
        Value object = eval(*attr->object, frame);
        auto* instance = std::get_if<InstancePtr>(&object);
        if (!instance) {
            raise(ErrorKind::AttributeError,
                  "'" + type_name(object) + "' object has no writable attribute '" + attr->name + "'");
        }
        (*instance)->attributes[attr->name] = std::move(value);
        return;
    }
    const auto& index = std::get<lang::Index>(target.node);
    Value object = eval(*index.object, frame);
    Value key = eval(*index.index, frame);
    auto* list = std::get_if<ListPtr>(&object);
    if (!list) {
        raise(ErrorKind::TypeError, "'" + type_name(object) + "' object does not support item assignment");
    }
    (*list)->items[normalize_index(key, (*list)->items.size())] = std::move(value);
}

Value Interpreter::lookup(const std::string& name, const Frame& frame)
{
    if (auto it = frame.locals.find(name); it != frame.locals.end()) {
        return it->second;
    }
    if (auto it = frame.scope->names.find(name); it != frame.scope->names.end()) {
        return it->second;
    }
    if (name == "len") return callable(BuiltinFunctionRef{Builtin::Len});
    if (name == "abs") return callable(BuiltinFunctionRef{Builtin::Abs});
    if (name == "str") return callable(BuiltinFunctionRef{Builtin::Str});
    if (name == "int") return callable(BuiltinFunctionRef{Builtin::Int});
    if (name == "float") return callable(BuiltinFunctionRef{Builtin::Float});
    raise(ErrorKind::NameError, "name '" + name + "' is not defined");
}

Value Interpreter::get_attribute(const Value& object, const std::string& name)
{
    if (const auto* instance = std::get_if<InstancePtr>(&object)) {
        if (auto it = (*instance)->attributes.find(name); it != (*instance)->attributes.end()) {
            return it->second;
        }
        const ClassInfo* cls = (*instance)->cls;
        if (const auto* method = cls->def->find_method(name)) {
            return callable(BoundMethod{*instance, FunctionRef{method, cls->scope, cls}});
        }
    } else if (const auto* c = std::get_if<CallablePtr>(&object)) {
        if (const auto* module = std::get_if<ModuleRef>(&(*c)->target)) {
            if (auto it = module->scope->names.find(name); it != module->scope->names.end()) {
                return it->second;
            }
            raise(ErrorKind::AttributeError, "module '" + module->scope->name + "' has no attribute '" + name + "'");
        }
    } else if (std::holds_alternative<ListPtr>(object)) {
        if (name == "append") return callable(BoundBuiltin{object, BuiltinMethod::ListAppend});
        if (name == "pop") return callable(BoundBuiltin{object, BuiltinMethod::ListPop});
    } else if (std::holds_alternative<std::string>(object)) {
        if (name == "upper") return callable(BoundBuiltin{object, BuiltinMethod::StrUpper});
        if (name == "lower") return callable(BoundBuiltin{object, BuiltinMethod::StrLower});
        if (name == "startswith") return callable(BoundBuiltin{object, BuiltinMethod::StrStartswith});
        if (name == "endswith") return callable(BoundBuiltin{object, BuiltinMethod::StrEndswith});
        if (name == "find") return callable(BoundBuiltin{object, BuiltinMethod::StrFind});
    }
    raise(ErrorKind::AttributeError, "'" + type_name(object) + "' object has no attribute '" + name + "'");
}

Value Interpreter::eval_binary(const lang::Binary& node, Frame& frame)
{
    if (node.op == BinaryOp::And) {
        Value lhs = eval(*node.lhs, frame);
        return truthy(lhs) ? eval(*node.rhs, frame) : lhs;
    }
    if (node.op == BinaryOp::Or) {
        Value lhs = eval(*node.lhs, frame);
        return truthy(lhs) ? lhs : eval(*node.rhs, frame);
    }
    Value lhs = eval(*node.lhs, frame);
    Value rhs = eval(*node.rhs, frame);
    switch (node.op) {
    case BinaryOp::Eq: return values_equal(lhs, rhs);
    case BinaryOp::Ne: return !values_equal(lhs, rhs);
    case BinaryOp::Lt: return compare_values(lhs, rhs) == -1;
    case BinaryOp::Le: {
        const int c = compare_values(lhs, rhs);
        return c == -1 || c == 0;
    }
    case BinaryOp::Gt: return compare_values(lhs, rhs) == 1;
    case BinaryOp::Ge: {
        const int c = compare_values(lhs, rhs);
        return c == 1 || c == 0;
    }
    default: return apply_arithmetic(node.op, lhs, rhs);
    }
}

Value Interpreter::eval(const lang::Expr& expr, Frame& frame)
{
    return std::visit(
        [&](const auto& node) -> Value {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, lang::NoneLit>) {
                return NoneValue{};
            } else if constexpr (std::is_same_v<T, lang::BoolLit>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, lang::IntLit>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, lang::FloatLit>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, lang::StrLit>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, lang::ListLit>) {
                auto list = std::make_shared<ListObject>();
                list->items.reserve(node.elements.size());
                for (const auto& el : node.elements) list->items.push_back(eval(el, frame));
                return list;
            } else if constexpr (std::is_same_v<T, lang::Name>) {
                return lookup(node.id, frame);
            } else if constexpr (std::is_same_v<T, lang::Binary>) {
                return eval_binary(node, frame);
            } else if constexpr (std::is_same_v<T, lang::Unary>) {
                Value v = eval(*node.operand, frame);
                if (node.op == lang::UnaryOp::Not) {
                    return !truthy(v);
                }
                if (is_integral(v)) {
                    const auto i = as_int(v);
                    if (i == std::numeric_limits<std::int64_t>::min()) {
                        raise(ErrorKind::OverflowError, "integer overflow");
                    }
                    return -i;
                }
                if (const auto* d = std::get_if<double>(&v)) return -*d;
                raise(ErrorKind::TypeError, "bad operand type for unary -: '" + type_name(v) + "'");
            } else if constexpr (std::is_same_v<T, lang::Call>) {
                Value callee = eval(*node.callee, frame);
                std::vector<Value> args;
                args.reserve(node.args.size());
                for (const auto& a : node.args) args.push_back(eval(a, frame));
                return call(callee, std::move(args));
            } else if constexpr (std::is_same_v<T, lang::Attribute>) {
                return get_attribute(eval(*node.object, frame), node.name);
            } else {
                Value object = eval(*node.object, frame);
                Value key = eval(*node.index, frame);
                if (const auto* list = std::get_if<ListPtr>(&object)) {
                    return (*list)->items[normalize_index(key, (*list)->items.size())];
                }
                if (const auto* s = std::get_if<std::string>(&object)) {
                    return std::string(1, (*s)[normalize_index(key, s->size())]);
                }
                raise(ErrorKind::TypeError, "'" + type_name(object) + "' object is not subscriptable");
            }
        },
        expr.node);
}

PredicateOutcome Interpreter::eval_condition(const lang::Expr& expr, Frame& frame)
{
    if (!options_.compute_distances) {
        return PredicateOutcome{truthy(eval(expr, frame)), 0.0, 0.0};
    }
    if (const auto* bin = std::get_if<lang::Binary>(&expr.node)) {
        if (bin->op == BinaryOp::And || bin->op == BinaryOp::Or) {
            const PredicateOutcome lhs = eval_condition(*bin->lhs, frame);
            const bool short_circuit = (bin->op == BinaryOp::And) != lhs.taken;
            const PredicateOutcome rhs =
                short_circuit ? shadow_condition(*bin->rhs, frame) : eval_condition(*bin->rhs, frame);
            return bin->op == BinaryOp::And ? combine_and(lhs, rhs) : combine_or(lhs, rhs);
        }
        if (lang::is_relational(bin->op)) {
            Value lhs = eval(*bin->lhs, frame);
            Value rhs = eval(*bin->rhs, frame);
            return relational_distance(bin->op, lhs, rhs);
        }
    }
    if (const auto* un = std::get_if<lang::Unary>(&expr.node); un && un->op == lang::UnaryOp::Not) {
        return negate(eval_condition(*un->operand, frame));
    }
    return truthiness_distance(eval(expr, frame));
}

// Distance of an operand the real evaluation skipped. Only call-free operands
// are evaluated (they cannot have side effects or consume steps); anything
// else, or an operand that would raise, counts as distance 1 both ways.
PredicateOutcome Interpreter::shadow_condition(const lang::Expr& expr, Frame& frame)
{
    if (!lang::is_call_free(expr)) {
        return PredicateOutcome{false, kBranchConstant, kBranchConstant};
    }
    try {
        return eval_condition(expr, frame);
    } catch (const RuntimeError&) {
        return PredicateOutcome{false, kBranchConstant, kBranchConstant};
    }
}

}  // namespace testgen::interp
