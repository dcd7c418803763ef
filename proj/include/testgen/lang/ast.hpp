#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace testgen::lang {

using NodeId = std::uint32_t;
using PredicateId = std::uint32_t;
using LineNo = int;

struct Span {
    int line = 0;
    int column = 0;
    int end_line = 0;
    int end_column = 0;
};

// Heap cell with value semantics so recursive AST nodes stay copyable.
template <typename T>
class Box {
public:
    Box() = default;
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other)
    {
        if (this != &other) {
            ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
        }
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    explicit operator bool() const { return static_cast<bool>(ptr_); }
    T& operator*() { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    T* operator->() { return ptr_.get(); }
    const T* operator->() const { return ptr_.get(); }

private:
    std::unique_ptr<T> ptr_;
};

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnaryOp { Not, Neg };

[[nodiscard]] const char* to_token(BinaryOp op);
[[nodiscard]] const char* to_token(UnaryOp op);
[[nodiscard]] bool is_relational(BinaryOp op);
[[nodiscard]] bool is_arithmetic(BinaryOp op);

struct Expr;

struct NoneLit {};
struct BoolLit { bool value = false; };
struct IntLit { std::int64_t value = 0; };
struct FloatLit { double value = 0.0; };
struct StrLit { std::string value; };
struct ListLit { std::vector<Expr> elements; };
struct Name { std::string id; };
struct Binary {
    BinaryOp op = BinaryOp::Add;
    Box<Expr> lhs;
    Box<Expr> rhs;
};
struct Unary {
    UnaryOp op = UnaryOp::Not;
    Box<Expr> operand;
};
struct Call {
    Box<Expr> callee;
    std::vector<Expr> args;
};
struct Attribute {
    Box<Expr> object;
    std::string name;
};
struct Index {
    Box<Expr> object;
    Box<Expr> index;
};

struct Expr {
    using Node = std::variant<NoneLit, BoolLit, IntLit, FloatLit, StrLit, ListLit, Name, Binary, Unary, Call,
                              Attribute, Index>;
    Node node;
    Span span;
    NodeId id = 0;
};

struct Stmt;

struct Assign {
    Expr target;
    Expr value;
};
struct IfBranch {
    Expr condition;
    PredicateId predicate = 0;
    Span span;  // the `if` / `elif` header
    std::vector<Stmt> body;
};
struct If {
    std::vector<IfBranch> branches;
    std::vector<Stmt> orelse;
};
struct While {
    Expr condition;
    PredicateId predicate = 0;
    std::vector<Stmt> body;
};
struct Return { std::optional<Expr> value; };
struct ExprStmt { Expr expr; };
struct Assert { Expr condition; };
struct Pass {};

struct Stmt {
    using Node = std::variant<Assign, If, While, Return, ExprStmt, Assert, Pass>;
    Node node;
    Span span;
    NodeId id = 0;
};

struct TypeAnnotation {
    enum class Kind { Int, Float, Str, Bool, None, List, ClassRef };
    Kind kind = Kind::None;
    std::string class_name;   // ClassRef only
    Box<TypeAnnotation> element;  // List only, may be empty for a bare `list`
};

[[nodiscard]] std::string to_string(const TypeAnnotation& annotation);

struct Param {
    std::string name;
    std::optional<TypeAnnotation> annotation;
    Span span;
};

struct FunctionDef {
    std::string name;
    std::vector<Param> params;
    std::optional<TypeAnnotation> return_annotation;
    std::vector<Stmt> body;
    Span span;
    NodeId id = 0;
};

struct ClassDef {
    std::string name;
    std::vector<FunctionDef> methods;
    Span span;
    NodeId id = 0;

    [[nodiscard]] const FunctionDef* find_method(std::string_view method) const;
};

struct UseDirective {
    std::string module;
    std::string alias;  // empty for a flat `use`
    Span span;
};

struct AstModule {
    std::string name;
    std::vector<UseDirective> uses;
    std::vector<FunctionDef> functions;
    std::vector<ClassDef> classes;
    std::uint32_t node_count = 0;
    std::uint32_t predicate_count = 0;

    [[nodiscard]] const FunctionDef* find_function(std::string_view function) const;
    [[nodiscard]] const ClassDef* find_class(std::string_view cls) const;
};

// Top-level definitions in source order.
using Definition = std::variant<const FunctionDef*, const ClassDef*>;
[[nodiscard]] std::vector<Definition> definitions_in_order(const AstModule& module);

// Reassigns NodeIds and PredicateIds by preorder traversal.
void number_nodes(AstModule& module);

}  // namespace testgen::lang
