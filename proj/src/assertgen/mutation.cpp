#include "testgen/assertgen/mutation.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace testgen::assertgen {

namespace {

using lang::BinaryOp;
using lang::Expr;
using lang::Stmt;

constexpr BinaryOp kArithmetic[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div, BinaryOp::Mod};
constexpr BinaryOp kRelational[] = {BinaryOp::Eq, BinaryOp::Ne, BinaryOp::Lt,
                                    BinaryOp::Le, BinaryOp::Gt, BinaryOp::Ge};

// One replacement at one site.
struct Site {
    lang::NodeId node = 0;
    MutationOperator op = MutationOperator::AOR;
    BinaryOp binary = BinaryOp::Add;  // AOR/ROR/COR replacement
    std::int64_t constant = 0;        // CRP replacement
    int line = 0;
    std::string description;
};

using ExprVisitor = std::function<void(Expr&)>;

void walk_expr(Expr& e, const ExprVisitor& fn)
{
    fn(e);
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, lang::ListLit>) {
                for (auto& el : n.elements) walk_expr(el, fn);
            } else if constexpr (std::is_same_v<T, lang::Binary>) {
                walk_expr(*n.lhs, fn);
                walk_expr(*n.rhs, fn);
            } else if constexpr (std::is_same_v<T, lang::Unary>) {
                walk_expr(*n.operand, fn);
            } else if constexpr (std::is_same_v<T, lang::Call>) {
                walk_expr(*n.callee, fn);
                for (auto& a : n.args) walk_expr(a, fn);
            } else if constexpr (std::is_same_v<T, lang::Attribute>) {
                walk_expr(*n.object, fn);
            } else if constexpr (std::is_same_v<T, lang::Index>) {
                walk_expr(*n.object, fn);
                walk_expr(*n.index, fn);
            }
        },
        e.node);
}

void walk_block(std::vector<Stmt>& body, const ExprVisitor& fn)
{
    for (auto& s : body) {
        std::visit(
            [&](auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, lang::Assign>) {
                    walk_expr(n.target, fn);
                    walk_expr(n.value, fn);
                } else if constexpr (std::is_same_v<T, lang::If>) {
                    for (auto& br : n.branches) {
                        walk_expr(br.condition, fn);
                        walk_block(br.body, fn);
                    }
                    walk_block(n.orelse, fn);
                } else if constexpr (std::is_same_v<T, lang::While>) {
                    walk_expr(n.condition, fn);
                    walk_block(n.body, fn);
                } else if constexpr (std::is_same_v<T, lang::Return>) {
                    if (n.value) walk_expr(*n.value, fn);
                } else if constexpr (std::is_same_v<T, lang::ExprStmt>) {
                    walk_expr(n.expr, fn);
                } else if constexpr (std::is_same_v<T, lang::Assert>) {
                    walk_expr(n.condition, fn);
                }
            },
            s.node);
    }
}

void walk_module(lang::AstModule& module, const ExprVisitor& fn)
{
    for (auto& f : module.functions) walk_block(f.body, fn);
    for (auto& c : module.classes) {
        for (auto& m : c.methods) walk_block(m.body, fn);
    }
}

std::string at_line(int line)
{
    return " (line " + std::to_string(line) + ")";
}

void collect_sites(Expr& e, std::vector<Site>& out)
{
    const int line = e.span.line;
    if (auto* bin = std::get_if<lang::Binary>(&e.node)) {
        const auto swap_within = [&](const auto& table, MutationOperator op) {
            for (BinaryOp replacement : table) {
                if (replacement == bin->op) continue;
                out.push_back({e.id, op, replacement, 0, line,
                               std::string(to_string(op)) + " " + lang::to_token(bin->op) + " -> "
                                   + lang::to_token(replacement) + at_line(line)});
            }
        };
        if (lang::is_arithmetic(bin->op)) {
            swap_within(kArithmetic, MutationOperator::AOR);
        } else if (lang::is_relational(bin->op)) {
            swap_within(kRelational, MutationOperator::ROR);
        } else {
            const BinaryOp other = bin->op == BinaryOp::And ? BinaryOp::Or : BinaryOp::And;
            const BinaryOp pair[] = {other};
            swap_within(pair, MutationOperator::COR);
        }
    } else if (const auto* lit = std::get_if<lang::IntLit>(&e.node)) {
        const std::int64_t c = lit->value;
        std::vector<std::int64_t> replacements{0, 1};
        if (c != std::numeric_limits<std::int64_t>::max()) replacements.push_back(c + 1);
        if (c != std::numeric_limits<std::int64_t>::min()) replacements.push_back(-c);
        std::vector<std::int64_t> seen;
        for (std::int64_t r : replacements) {
            if (r == c || std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            seen.push_back(r);
            out.push_back({e.id, MutationOperator::CRP, BinaryOp::Add, r, line,
                           "CRP " + std::to_string(c) + " -> " + std::to_string(r) + at_line(line)});
        }
    } else if (const auto* un = std::get_if<lang::Unary>(&e.node); un && un->op == lang::UnaryOp::Not) {
        out.push_back({e.id, MutationOperator::NotRemoval, BinaryOp::Add, 0, line, "NOT removed" + at_line(line)});
    }
}

void apply(Expr& e, const Site& site)
{
    switch (site.op) {
    case MutationOperator::AOR:
    case MutationOperator::ROR:
    case MutationOperator::COR: std::get<lang::Binary>(e.node).op = site.binary; break;
    case MutationOperator::CRP: std::get<lang::IntLit>(e.node).value = site.constant; break;
    case MutationOperator::NotRemoval: {
        Expr operand = *std::get<lang::Unary>(e.node).operand;
        e = std::move(operand);
        break;
    }
    }
}

}  // namespace

const char* to_string(MutationOperator op)
{
    switch (op) {
    case MutationOperator::AOR: return "AOR";
    case MutationOperator::ROR: return "ROR";
    case MutationOperator::COR: return "COR";
    case MutationOperator::CRP: return "CRP";
    case MutationOperator::NotRemoval: return "NOT";
    }
    return "?";
}

std::vector<Mutant> generate_mutants(const lang::AstModule& module)
{
    lang::AstModule scratch = module;
    std::vector<Site> sites;
    walk_module(scratch, [&](Expr& e) { collect_sites(e, sites); });
    // NodeIds are preorder numbers; sorting makes the order independent of
    // how functions and classes interleave in the source.
    std::stable_sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) { return a.node < b.node; });

    std::vector<Mutant> mutants;
    mutants.reserve(sites.size());
    for (const auto& site : sites) {
        auto copy = std::make_shared<lang::AstModule>(module);
        bool done = false;
        walk_module(*copy, [&](Expr& e) {
            if (!done && e.id == site.node) {
                apply(e, site);
                done = true;
            }
        });
        Mutant m;
        m.id = mutants.size();
        m.op = site.op;
        m.location = site.node;
        m.description = site.description;
        m.module = std::move(copy);
        mutants.push_back(std::move(m));
    }
    return mutants;
}

}  // namespace testgen::assertgen
