#include "testgen/lang/parser.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace testgen::lang {

bool is_valid_identifier(std::string_view name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        return false;
    }
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    AstModule parse_module(const std::string& name)
    {
        AstModule module;
        module.name = name;
        while (!at(TokenKind::End)) {
            if (accept(TokenKind::Newline)) {
                continue;
            }
            switch (peek().kind) {
            case TokenKind::Use: module.uses.push_back(parse_use()); break;
            case TokenKind::Def: module.functions.push_back(parse_function()); break;
            case TokenKind::Class: module.classes.push_back(parse_class()); break;
            case TokenKind::Indent: fail("unexpected indent");
            default: fail("expected 'def', 'class' or 'use' at module level");
            }
        }
        std::unordered_set<std::string> names;
        for (const auto& f : module.functions) {
            if (!names.insert(f.name).second) {
                throw SyntaxError(f.span.line, f.span.column, "duplicate definition of '" + f.name + "'");
            }
        }
        for (const auto& c : module.classes) {
            if (!names.insert(c.name).second) {
                throw SyntaxError(c.span.line, c.span.column, "duplicate definition of '" + c.name + "'");
            }
        }
        number_nodes(module);
        return module;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    bool at(TokenKind kind) const { return peek().kind == kind; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(TokenKind kind)
    {
        if (at(kind)) {
            next();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& message) const
    {
        throw SyntaxError(peek().line, peek().column, message);
    }
    const Token& expect(TokenKind kind)
    {
        if (!at(kind)) {
            fail(std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
        }
        return next();
    }
    std::string expect_name()
    {
        return expect(TokenKind::Name).text;
    }
    Span start_span() const { return Span{peek().line, peek().column, peek().line, peek().column}; }
    void finish(Span& span) const
    {
        const Token& last = toks_[pos_ > 0 ? pos_ - 1 : 0];
        span.end_line = last.line;
        span.end_column = last.column;
    }

    UseDirective parse_use()
    {
        UseDirective use;
        use.span = start_span();
        expect(TokenKind::Use);
        use.module = expect_name();
        if (accept(TokenKind::As)) {
            use.alias = expect_name();
        }
        finish(use.span);
        expect(TokenKind::Newline);
        return use;
    }

    TypeAnnotation parse_annotation()
    {
        TypeAnnotation ann;
        if (accept(TokenKind::None)) {
            ann.kind = TypeAnnotation::Kind::None;
            return ann;
        }
        const std::string name = expect_name();
        if (name == "int") {
            ann.kind = TypeAnnotation::Kind::Int;
        } else if (name == "float") {
            ann.kind = TypeAnnotation::Kind::Float;
        } else if (name == "str") {
            ann.kind = TypeAnnotation::Kind::Str;
        } else if (name == "bool") {
            ann.kind = TypeAnnotation::Kind::Bool;
        } else if (name == "list") {
            ann.kind = TypeAnnotation::Kind::List;
            if (accept(TokenKind::LBracket)) {
                ann.element = parse_annotation();
                expect(TokenKind::RBracket);
            }
            return ann;
        } else {
            ann.kind = TypeAnnotation::Kind::ClassRef;
            ann.class_name = name;
        }
        if (at(TokenKind::LBracket)) {
            fail("only 'list' accepts a type argument");
        }
        return ann;
    }

    FunctionDef parse_function()
    {
        FunctionDef fn;
        fn.span = start_span();
        expect(TokenKind::Def);
        fn.name = expect_name();
        expect(TokenKind::LParen);
        std::unordered_set<std::string> seen;
        while (!at(TokenKind::RParen)) {
            Param p;
            p.span = start_span();
            p.name = expect_name();
            if (!seen.insert(p.name).second) {
                throw SyntaxError(p.span.line, p.span.column, "duplicate parameter '" + p.name + "'");
            }
            if (accept(TokenKind::Colon)) {
                p.annotation = parse_annotation();
            }
            finish(p.span);
            fn.params.push_back(std::move(p));
            if (!accept(TokenKind::Comma)) {
                break;
            }
        }
        expect(TokenKind::RParen);
        if (accept(TokenKind::Arrow)) {
            fn.return_annotation = parse_annotation();
        }
        expect(TokenKind::Colon);
        fn.body = parse_block();
        finish(fn.span);
        return fn;
    }

    ClassDef parse_class()
    {
        ClassDef cls;
        cls.span = start_span();
        expect(TokenKind::Class);
        cls.name = expect_name();
        expect(TokenKind::Colon);
        expect(TokenKind::Newline);
        expect(TokenKind::Indent);
        std::unordered_set<std::string> seen;
        while (!accept(TokenKind::Dedent)) {
            if (accept(TokenKind::Newline)) {
                continue;
            }
            if (accept(TokenKind::Pass)) {
                expect(TokenKind::Newline);
                continue;
            }
            if (!at(TokenKind::Def)) {
                fail("class bodies may only contain method definitions");
            }
            FunctionDef method = parse_function();
            if (!seen.insert(method.name).second) {
                throw SyntaxError(method.span.line, method.span.column,
                                  "duplicate method '" + method.name + "'");
            }
            if (method.params.empty()) {
                throw SyntaxError(method.span.line, method.span.column,
                                  "method '" + method.name + "' needs a receiver parameter");
            }
            cls.methods.push_back(std::move(method));
        }
        finish(cls.span);
        return cls;
    }

    std::vector<Stmt> parse_block()
    {
        std::vector<Stmt> body;
        if (!accept(TokenKind::Newline)) {
            body.push_back(parse_simple_statement());
            return body;
        }
        expect(TokenKind::Indent);
        while (!accept(TokenKind::Dedent)) {
            if (accept(TokenKind::Newline)) {
                continue;
            }
            body.push_back(parse_statement());
        }
        return body;
    }

    Stmt parse_statement()
    {
        switch (peek().kind) {
        case TokenKind::If: return parse_if();
        case TokenKind::While: return parse_while();
        case TokenKind::Def:
        case TokenKind::Class: fail("nested definitions are not supported");
        default: return parse_simple_statement();
        }
    }

    Stmt parse_if()
    {
        Stmt stmt;
        stmt.span = start_span();
        If node;
        do {
            IfBranch branch;
            branch.span = start_span();
            next();  // `if` or `elif`
            branch.condition = parse_expr();
            finish(branch.span);
            expect(TokenKind::Colon);
            branch.body = parse_block();
            node.branches.push_back(std::move(branch));
        } while (at(TokenKind::Elif));
        if (accept(TokenKind::Else)) {
            expect(TokenKind::Colon);
            node.orelse = parse_block();
        }
        finish(stmt.span);
        stmt.node = std::move(node);
        return stmt;
    }

    Stmt parse_while()
    {
        Stmt stmt;
        stmt.span = start_span();
        expect(TokenKind::While);
        While node;
        node.condition = parse_expr();
        expect(TokenKind::Colon);
        node.body = parse_block();
        finish(stmt.span);
        stmt.node = std::move(node);
        return stmt;
    }

    Stmt parse_simple_statement()
    {
        Stmt stmt;
        stmt.span = start_span();
        if (accept(TokenKind::Return)) {
            Return ret;
            if (!at(TokenKind::Newline)) {
                ret.value = parse_expr();
            }
            stmt.node = std::move(ret);
        } else if (accept(TokenKind::Pass)) {
            stmt.node = Pass{};
        } else if (accept(TokenKind::Assert)) {
            stmt.node = Assert{parse_expr()};
        } else {
            Expr lhs = parse_expr();
            if (at(TokenKind::Assign)) {
                const Token& eq = next();
                if (!std::holds_alternative<Name>(lhs.node) && !std::holds_alternative<Attribute>(lhs.node)
                    && !std::holds_alternative<Index>(lhs.node)) {
                    throw SyntaxError(eq.line, eq.column, "cannot assign to expression");
                }
                Expr rhs = parse_expr();
                stmt.node = Assign{std::move(lhs), std::move(rhs)};
            } else {
                stmt.node = ExprStmt{std::move(lhs)};
            }
        }
        finish(stmt.span);
        expect(TokenKind::Newline);
        return stmt;
    }

    Expr make(Expr::Node node, Span span) const
    {
        finish(span);
        Expr e;
        e.node = std::move(node);
        e.span = span;
        return e;
    }

    Expr parse_expr() { return parse_or(); }

    Expr parse_or()
    {
        const Span span = start_span();
        Expr lhs = parse_and();
        while (accept(TokenKind::Or)) {
            Expr rhs = parse_and();
            lhs = make(Binary{BinaryOp::Or, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    Expr parse_and()
    {
        const Span span = start_span();
        Expr lhs = parse_not();
        while (accept(TokenKind::And)) {
            Expr rhs = parse_not();
            lhs = make(Binary{BinaryOp::And, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    Expr parse_not()
    {
        const Span span = start_span();
        if (accept(TokenKind::Not)) {
            Expr operand = parse_not();
            return make(Unary{UnaryOp::Not, std::move(operand)}, span);
        }
        return parse_comparison();
    }

    static std::optional<BinaryOp> comparison_op(TokenKind kind)
    {
        switch (kind) {
        case TokenKind::EqEq: return BinaryOp::Eq;
        case TokenKind::NotEq: return BinaryOp::Ne;
        case TokenKind::Less: return BinaryOp::Lt;
        case TokenKind::LessEq: return BinaryOp::Le;
        case TokenKind::Greater: return BinaryOp::Gt;
        case TokenKind::GreaterEq: return BinaryOp::Ge;
        default: return std::nullopt;
        }
    }

    Expr parse_comparison()
    {
        const Span span = start_span();
        Expr lhs = parse_arith();
        if (auto op = comparison_op(peek().kind)) {
            next();
            Expr rhs = parse_arith();
            if (comparison_op(peek().kind)) {
                fail("chained comparisons are not supported");
            }
            return make(Binary{*op, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    Expr parse_arith()
    {
        const Span span = start_span();
        Expr lhs = parse_term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const BinaryOp op = next().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
            Expr rhs = parse_term();
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    Expr parse_term()
    {
        const Span span = start_span();
        Expr lhs = parse_unary();
        while (at(TokenKind::Star) || at(TokenKind::Slash) || at(TokenKind::Percent)) {
            const TokenKind kind = next().kind;
            const BinaryOp op = kind == TokenKind::Star ? BinaryOp::Mul
                              : kind == TokenKind::Slash ? BinaryOp::Div
                                                         : BinaryOp::Mod;
            Expr rhs = parse_unary();
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    Expr parse_unary()
    {
        const Span span = start_span();
        if (accept(TokenKind::Minus)) {
            Expr operand = parse_unary();
            return make(Unary{UnaryOp::Neg, std::move(operand)}, span);
        }
        return parse_postfix();
    }

    Expr parse_postfix()
    {
        const Span span = start_span();
        Expr e = parse_atom();
        while (true) {
            if (accept(TokenKind::LParen)) {
                Call call;
                call.callee = std::move(e);
                while (!at(TokenKind::RParen)) {
                    call.args.push_back(parse_expr());
                    if (!accept(TokenKind::Comma)) {
                        break;
                    }
                }
                expect(TokenKind::RParen);
                e = make(std::move(call), span);
            } else if (accept(TokenKind::Dot)) {
                std::string name = expect_name();
                e = make(Attribute{std::move(e), std::move(name)}, span);
            } else if (accept(TokenKind::LBracket)) {
                Expr index = parse_expr();
                expect(TokenKind::RBracket);
                e = make(Index{std::move(e), std::move(index)}, span);
            } else {
                return e;
            }
        }
    }

    Expr parse_atom()
    {
        const Span span = start_span();
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Int: next(); return make(IntLit{tok.int_value}, span);
        case TokenKind::Float: next(); return make(FloatLit{tok.float_value}, span);
        case TokenKind::String: next(); return make(StrLit{tok.text}, span);
        case TokenKind::True: next(); return make(BoolLit{true}, span);
        case TokenKind::False: next(); return make(BoolLit{false}, span);
        case TokenKind::None: next(); return make(NoneLit{}, span);
        case TokenKind::Name: next(); return make(Name{tok.text}, span);
        case TokenKind::LParen: {
            next();
            Expr inner = parse_expr();
            expect(TokenKind::RParen);
            return inner;
        }
        case TokenKind::LBracket: {
            next();
            ListLit list;
            while (!at(TokenKind::RBracket)) {
                list.elements.push_back(parse_expr());
                if (!accept(TokenKind::Comma)) {
                    break;
                }
            }
            expect(TokenKind::RBracket);
            return make(std::move(list), span);
        }
        default: fail(std::string("expected an expression, found ") + describe(tok.kind));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

AstModule parse_module(const SourceModule& src)
{
    return Parser(tokenize(src.text)).parse_module(src.name);
}

SourceModule read_source(const std::filesystem::path& dir, const std::string& name)
{
    SourceModule src;
    src.name = name;
    src.path = dir / (name + ".mdyn");
    std::ifstream in(src.path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + src.path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    src.text = buf.str();
    return src;
}

}  // namespace testgen::lang
