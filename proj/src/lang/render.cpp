#include "testgen/lang/render.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace testgen::lang {

std::string quote_string(const std::string& value)
{
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "\"";
    for (unsigned char c : value) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (c < 0x20 || c == 0x7f) {
                out += "\\x";
                out += hex[c >> 4];
                out += hex[c & 0xf];
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
    return out;
}

std::string format_float(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    std::string out(buf, ptr);
    if (out.find_first_of(".eEn") == std::string::npos) {
        out += ".0";
    } else if (out.find_first_of("eE") != std::string::npos && out.find('.') == std::string::npos) {
        // "1e+20" does not lex as a float without a fraction part in every reader; keep it explicit
        const auto e = out.find_first_of("eE");
        out.insert(e, ".0");
    }
    return out;
}

std::string format_int(std::int64_t value)
{
    if (value == std::numeric_limits<std::int64_t>::min()) {
        return "(-9223372036854775807 - 1)";
    }
    return std::to_string(value);
}

namespace {

enum Prec : int { POr = 1, PAnd, PNot, PCmp, PAdd, PMul, PUnary, PPostfix };

int precedence(const Expr& e)
{
    if (const auto* b = std::get_if<Binary>(&e.node)) {
        switch (b->op) {
        case BinaryOp::Or: return POr;
        case BinaryOp::And: return PAnd;
        case BinaryOp::Add:
        case BinaryOp::Sub: return PAdd;
        case BinaryOp::Mul:
        case BinaryOp::Div:
        case BinaryOp::Mod: return PMul;
        default: return PCmp;
        }
    }
    if (const auto* u = std::get_if<Unary>(&e.node)) {
        return u->op == UnaryOp::Not ? PNot : PUnary;
    }
    if (const auto* i = std::get_if<IntLit>(&e.node); i && i->value < 0) {
        return PUnary;
    }
    if (const auto* f = std::get_if<FloatLit>(&e.node); f && std::signbit(f->value)) {
        return PUnary;
    }
    return PPostfix;
}

void render(std::ostream& os, const Expr& e, int min_prec);

void render_args(std::ostream& os, const std::vector<Expr>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        render(os, args[i], POr);
    }
}

void render(std::ostream& os, const Expr& e, int min_prec)
{
    const int prec = precedence(e);
    const bool parens = prec < min_prec;
    if (parens) os << '(';
    std::visit(
        [&os, prec](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NoneLit>) {
                os << "None";
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                os << (n.value ? "True" : "False");
            } else if constexpr (std::is_same_v<T, IntLit>) {
                os << format_int(n.value);
            } else if constexpr (std::is_same_v<T, FloatLit>) {
                os << format_float(n.value);
            } else if constexpr (std::is_same_v<T, StrLit>) {
                os << quote_string(n.value);
            } else if constexpr (std::is_same_v<T, ListLit>) {
                os << '[';
                render_args(os, n.elements);
                os << ']';
            } else if constexpr (std::is_same_v<T, Name>) {
                os << n.id;
            } else if constexpr (std::is_same_v<T, Binary>) {
                const bool cmp = is_relational(n.op);
                render(os, *n.lhs, cmp ? prec + 1 : prec);
                os << ' ' << to_token(n.op) << ' ';
                render(os, *n.rhs, prec + 1);
            } else if constexpr (std::is_same_v<T, Unary>) {
                if (n.op == UnaryOp::Not) {
                    os << "not ";
                    render(os, *n.operand, PNot);
                } else {
                    os << '-';
                    render(os, *n.operand, PUnary);
                }
            } else if constexpr (std::is_same_v<T, Call>) {
                render(os, *n.callee, PPostfix);
                os << '(';
                render_args(os, n.args);
                os << ')';
            } else if constexpr (std::is_same_v<T, Attribute>) {
                render(os, *n.object, PPostfix);
                os << '.' << n.name;
            } else if constexpr (std::is_same_v<T, Index>) {
                render(os, *n.object, PPostfix);
                os << '[';
                render(os, *n.index, POr);
                os << ']';
            }
        },
        e.node);
    if (parens) os << ')';
}

void indent(std::ostream& os, int depth)
{
    for (int i = 0; i < depth; ++i) os << "    ";
}

void render_block(std::ostream& os, const std::vector<Stmt>& body, int depth);

void render_stmt(std::ostream& os, const Stmt& s, int depth)
{
    std::visit(
        [&os, depth](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Assign>) {
                indent(os, depth);
                render(os, n.target, POr);
                os << " = ";
                render(os, n.value, POr);
                os << '\n';
            } else if constexpr (std::is_same_v<T, If>) {
                for (std::size_t i = 0; i < n.branches.size(); ++i) {
                    indent(os, depth);
                    os << (i == 0 ? "if " : "elif ");
                    render(os, n.branches[i].condition, POr);
                    os << ":\n";
                    render_block(os, n.branches[i].body, depth + 1);
                }
                if (!n.orelse.empty()) {
                    indent(os, depth);
                    os << "else:\n";
                    render_block(os, n.orelse, depth + 1);
                }
            } else if constexpr (std::is_same_v<T, While>) {
                indent(os, depth);
                os << "while ";
                render(os, n.condition, POr);
                os << ":\n";
                render_block(os, n.body, depth + 1);
            } else if constexpr (std::is_same_v<T, Return>) {
                indent(os, depth);
                os << "return";
                if (n.value) {
                    os << ' ';
                    render(os, *n.value, POr);
                }
                os << '\n';
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                indent(os, depth);
                render(os, n.expr, POr);
                os << '\n';
            } else if constexpr (std::is_same_v<T, Assert>) {
                indent(os, depth);
                os << "assert ";
                render(os, n.condition, POr);
                os << '\n';
            } else {
                indent(os, depth);
                os << "pass\n";
            }
        },
        s.node);
}

void render_block(std::ostream& os, const std::vector<Stmt>& body, int depth)
{
    if (body.empty()) {
        indent(os, depth);
        os << "pass\n";
        return;
    }
    for (const auto& s : body) render_stmt(os, s, depth);
}

void render_function(std::ostream& os, const FunctionDef& f, int depth)
{
    indent(os, depth);
    os << "def " << f.name << '(';
    for (std::size_t i = 0; i < f.params.size(); ++i) {
        if (i) os << ", ";
        os << f.params[i].name;
        if (f.params[i].annotation) os << ": " << to_string(*f.params[i].annotation);
    }
    os << ')';
    if (f.return_annotation) os << " -> " << to_string(*f.return_annotation);
    os << ":\n";
    render_block(os, f.body, depth + 1);
}

}  // namespace

std::string render_expr(const Expr& expr)
{
    std::ostringstream os;
    render(os, expr, POr);
    return os.str();
}

std::string render_source(const AstModule& module)
{
    std::ostringstream os;
    for (const auto& use : module.uses) {
        os << "use " << use.module;
        if (!use.alias.empty()) os << " as " << use.alias;
        os << '\n';
    }
    bool first = module.uses.empty();
    for (const auto& def : definitions_in_order(module)) {
        if (!first) os << "\n\n";
        first = false;
        if (const auto* f = std::get_if<const FunctionDef*>(&def)) {
            render_function(os, **f, 0);
            continue;
        }
        const auto* cls = std::get<const ClassDef*>(def);
        os << "class " << cls->name << ":\n";
        if (cls->methods.empty()) {
            os << "    pass\n";
        }
        for (std::size_t i = 0; i < cls->methods.size(); ++i) {
            if (i) os << '\n';
            render_function(os, cls->methods[i], 1);
        }
    }
    return os.str();
}

}  // namespace testgen::lang
