#include "testgen/lang/structure.hpp"

#include <algorithm>
#include <sstream>

#include "testgen/lang/render.hpp"

namespace testgen::lang {

const char* to_token(BinaryOp op)
{
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "and";
    case BinaryOp::Or: return "or";
    }
    return "?";
}

const char* to_token(UnaryOp op)
{
    return op == UnaryOp::Not ? "not" : "-";
}

bool is_relational(BinaryOp op)
{
    return op == BinaryOp::Eq || op == BinaryOp::Ne || op == BinaryOp::Lt || op == BinaryOp::Le
        || op == BinaryOp::Gt || op == BinaryOp::Ge;
}

bool is_arithmetic(BinaryOp op)
{
    return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul || op == BinaryOp::Div
        || op == BinaryOp::Mod;
}

std::string to_string(const TypeAnnotation& annotation)
{
    using Kind = TypeAnnotation::Kind;
    switch (annotation.kind) {
    case Kind::Int: return "int";
    case Kind::Float: return "float";
    case Kind::Str: return "str";
    case Kind::Bool: return "bool";
    case Kind::None: return "None";
    case Kind::ClassRef: return annotation.class_name;
    case Kind::List:
        return annotation.element ? "list[" + to_string(*annotation.element) + "]" : "list";
    }
    return "?";
}

const FunctionDef* ClassDef::find_method(std::string_view method) const
{
    for (const auto& m : methods) {
        if (m.name == method) {
            return &m;
        }
    }
    return nullptr;
}

const FunctionDef* AstModule::find_function(std::string_view function) const
{
    for (const auto& f : functions) {
        if (f.name == function) {
            return &f;
        }
    }
    return nullptr;
}

const ClassDef* AstModule::find_class(std::string_view cls) const
{
    for (const auto& c : classes) {
        if (c.name == cls) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<Definition> definitions_in_order(const AstModule& module)
{
    std::vector<std::pair<int, Definition>> keyed;
    for (const auto& f : module.functions) {
        keyed.emplace_back(f.span.line, &f);
    }
    for (const auto& c : module.classes) {
        keyed.emplace_back(c.span.line, &c);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Definition> out;
    out.reserve(keyed.size());
    for (auto& [line, def] : keyed) {
        out.push_back(def);
    }
    return out;
}

namespace {

struct Numberer {
    NodeId next_node = 0;
    PredicateId next_predicate = 0;

    void expr(Expr& e)
    {
        e.id = next_node++;
        std::visit(
            [this](auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, ListLit>) {
                    for (auto& el : n.elements) expr(el);
                } else if constexpr (std::is_same_v<T, Binary>) {
                    expr(*n.lhs);
                    expr(*n.rhs);
                } else if constexpr (std::is_same_v<T, Unary>) {
                    expr(*n.operand);
                } else if constexpr (std::is_same_v<T, Call>) {
                    expr(*n.callee);
                    for (auto& a : n.args) expr(a);
                } else if constexpr (std::is_same_v<T, Attribute>) {
                    expr(*n.object);
                } else if constexpr (std::is_same_v<T, Index>) {
                    expr(*n.object);
                    expr(*n.index);
                }
            },
            e.node);
    }

    void block(std::vector<Stmt>& body)
    {
        for (auto& s : body) stmt(s);
    }

    void stmt(Stmt& s)
    {
        s.id = next_node++;
        std::visit(
            [this](auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Assign>) {
                    expr(n.target);
                    expr(n.value);
                } else if constexpr (std::is_same_v<T, If>) {
                    for (auto& br : n.branches) {
                        br.predicate = next_predicate++;
                        expr(br.condition);
                        block(br.body);
                    }
                    block(n.orelse);
                } else if constexpr (std::is_same_v<T, While>) {
                    n.predicate = next_predicate++;
                    expr(n.condition);
                    block(n.body);
                } else if constexpr (std::is_same_v<T, Return>) {
                    if (n.value) expr(*n.value);
                } else if constexpr (std::is_same_v<T, ExprStmt>) {
                    expr(n.expr);
                } else if constexpr (std::is_same_v<T, Assert>) {
                    expr(n.condition);
                }
            },
            s.node);
    }

    void function(FunctionDef& f)
    {
        f.id = next_node++;
        block(f.body);
    }
};

template <typename F>
void for_each_stmt(const std::vector<Stmt>& body, F&& fn)
{
    for (const auto& s : body) {
        fn(s);
        if (const auto* node = std::get_if<If>(&s.node)) {
            for (const auto& br : node->branches) for_each_stmt(br.body, fn);
            for_each_stmt(node->orelse, fn);
        } else if (const auto* loop = std::get_if<While>(&s.node)) {
            for_each_stmt(loop->body, fn);
        }
    }
}

template <typename F>
void for_each_body(const AstModule& module, F&& fn)
{
    for (const auto& def : definitions_in_order(module)) {
        if (const auto* f = std::get_if<const FunctionDef*>(&def)) {
            fn((*f)->body);
        } else {
            for (const auto& m : std::get<const ClassDef*>(def)->methods) fn(m.body);
        }
    }
}

void dump_expr(std::ostream& os, const Expr& e)
{
    std::visit(
        [&os](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NoneLit>) {
                os << "None";
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                os << (n.value ? "True" : "False");
            } else if constexpr (std::is_same_v<T, IntLit>) {
                os << "(int " << n.value << ")";
            } else if constexpr (std::is_same_v<T, FloatLit>) {
                os << "(float " << format_float(n.value) << ")";
            } else if constexpr (std::is_same_v<T, StrLit>) {
                os << "(str " << quote_string(n.value) << ")";
            } else if constexpr (std::is_same_v<T, ListLit>) {
                os << "(list";
                for (const auto& el : n.elements) {
                    os << ' ';
                    dump_expr(os, el);
                }
                os << ")";
            } else if constexpr (std::is_same_v<T, Name>) {
                os << "(name " << n.id << ")";
            } else if constexpr (std::is_same_v<T, Binary>) {
                os << "(" << to_token(n.op) << ' ';
                dump_expr(os, *n.lhs);
                os << ' ';
                dump_expr(os, *n.rhs);
                os << ")";
            } else if constexpr (std::is_same_v<T, Unary>) {
                os << "(u" << to_token(n.op) << ' ';
                dump_expr(os, *n.operand);
                os << ")";
            } else if constexpr (std::is_same_v<T, Call>) {
                os << "(call ";
                dump_expr(os, *n.callee);
                for (const auto& a : n.args) {
                    os << ' ';
                    dump_expr(os, a);
                }
                os << ")";
            } else if constexpr (std::is_same_v<T, Attribute>) {
                os << "(attr ";
                dump_expr(os, *n.object);
                os << ' ' << n.name << ")";
            } else if constexpr (std::is_same_v<T, Index>) {
                os << "(index ";
                dump_expr(os, *n.object);
                os << ' ';
                dump_expr(os, *n.index);
                os << ")";
            }
        },
        e.node);
}

void dump_block(std::ostream& os, const std::vector<Stmt>& body);

void dump_stmt(std::ostream& os, const Stmt& s)
{
    std::visit(
        [&os](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Assign>) {
                os << "(assign ";
                dump_expr(os, n.target);
                os << ' ';
                dump_expr(os, n.value);
                os << ")";
            } else if constexpr (std::is_same_v<T, If>) {
                os << "(if";
                for (const auto& br : n.branches) {
                    os << " (branch p" << br.predicate << ' ';
                    dump_expr(os, br.condition);
                    dump_block(os, br.body);
                    os << ")";
                }
                os << " (else";
                dump_block(os, n.orelse);
                os << "))";
            } else if constexpr (std::is_same_v<T, While>) {
                os << "(while p" << n.predicate << ' ';
                dump_expr(os, n.condition);
                dump_block(os, n.body);
                os << ")";
            } else if constexpr (std::is_same_v<T, Return>) {
                os << "(return";
                if (n.value) {
                    os << ' ';
                    dump_expr(os, *n.value);
                }
                os << ")";
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                os << "(expr ";
                dump_expr(os, n.expr);
                os << ")";
            } else if constexpr (std::is_same_v<T, Assert>) {
                os << "(assert ";
                dump_expr(os, n.condition);
                os << ")";
            } else {
                os << "(pass)";
            }
        },
        s.node);
}

void dump_block(std::ostream& os, const std::vector<Stmt>& body)
{
    for (const auto& s : body) {
        os << ' ';
        dump_stmt(os, s);
    }
}

void dump_function(std::ostream& os, const FunctionDef& f)
{
    os << "(def " << f.name << " (";
    for (const auto& p : f.params) {
        os << ' ' << p.name;
        if (p.annotation) os << ':' << to_string(*p.annotation);
    }
    os << ")";
    if (f.return_annotation) os << " -> " << to_string(*f.return_annotation);
    dump_block(os, f.body);
    os << ")";
}

}  // namespace

void number_nodes(AstModule& module)
{
    struct Slot {
        int line;
        bool is_class;
        std::size_t index;
    };
    std::vector<Slot> order;
    for (std::size_t i = 0; i < module.functions.size(); ++i) {
        order.push_back({module.functions[i].span.line, false, i});
    }
    for (std::size_t i = 0; i < module.classes.size(); ++i) {
        order.push_back({module.classes[i].span.line, true, i});
    }
    std::stable_sort(order.begin(), order.end(), [](const Slot& a, const Slot& b) { return a.line < b.line; });

    Numberer n;
    for (const Slot& slot : order) {
        if (!slot.is_class) {
            n.function(module.functions[slot.index]);
            continue;
        }
        ClassDef& cls = module.classes[slot.index];
        cls.id = n.next_node++;
        for (auto& m : cls.methods) n.function(m);
    }
    module.node_count = n.next_node;
    module.predicate_count = n.next_predicate;
}

std::vector<PredicateId> collect_predicates(const AstModule& module)
{
    std::vector<PredicateId> out;
    for_each_body(module, [&](const std::vector<Stmt>& body) {
        for_each_stmt(body, [&](const Stmt& s) {
            if (const auto* node = std::get_if<If>(&s.node)) {
                for (const auto& br : node->branches) out.push_back(br.predicate);
            } else if (const auto* loop = std::get_if<While>(&s.node)) {
                out.push_back(loop->predicate);
            }
        });
    });
    return out;
}

std::set<LineNo> collect_lines(const AstModule& module)
{
    std::set<LineNo> out;
    for_each_body(module, [&](const std::vector<Stmt>& body) {
        for_each_stmt(body, [&](const Stmt& s) {
            out.insert(s.span.line);
            if (const auto* node = std::get_if<If>(&s.node)) {
                for (const auto& br : node->branches) out.insert(br.span.line);
            }
        });
    });
    return out;
}

std::string dump_structure(const AstModule& module)
{
    std::ostringstream os;
    os << "(module";
    for (const auto& use : module.uses) {
        os << " (use " << use.module;
        if (!use.alias.empty()) os << " as " << use.alias;
        os << ")";
    }
    for (const auto& def : definitions_in_order(module)) {
        os << ' ';
        if (const auto* f = std::get_if<const FunctionDef*>(&def)) {
            dump_function(os, **f);
        } else {
            const auto* cls = std::get<const ClassDef*>(def);
            os << "(class " << cls->name;
            for (const auto& m : cls->methods) {
                os << ' ';
                dump_function(os, m);
            }
            os << ")";
        }
    }
    os << ")";
    return os.str();
}

bool structurally_equal(const AstModule& a, const AstModule& b)
{
    return dump_structure(a) == dump_structure(b);
}

bool is_call_free(const Expr& expr)
{
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Call>) {
                return false;
            } else if constexpr (std::is_same_v<T, ListLit>) {
                return std::all_of(n.elements.begin(), n.elements.end(),
                                   [](const Expr& e) { return is_call_free(e); });
            } else if constexpr (std::is_same_v<T, Binary>) {
                return is_call_free(*n.lhs) && is_call_free(*n.rhs);
            } else if constexpr (std::is_same_v<T, Unary>) {
                return is_call_free(*n.operand);
            } else if constexpr (std::is_same_v<T, Attribute>) {
                return is_call_free(*n.object);
            } else if constexpr (std::is_same_v<T, Index>) {
                return is_call_free(*n.object) && is_call_free(*n.index);
            } else {
                return true;
            }
        },
        expr.node);
}

}  // namespace testgen::lang
