#include "testgen/fitness/goals.hpp"

#include "testgen/lang/structure.hpp"

namespace testgen::fitness {

namespace {

class DependenceWalker {
public:
    explicit DependenceWalker(ModuleGoals& goals) : goals_(goals) {}

    // Returns whether the body holds any predicate.
    bool walk(const std::vector<lang::Stmt>& body, const std::optional<BranchGoal>& parent,
              const std::string& callable)
    {
        bool branches = false;
        for (const auto& stmt : body) {
            goals_.lines.try_emplace(stmt.span.line, Dependence{parent, callable});
            if (const auto* node = std::get_if<lang::If>(&stmt.node)) {
                branches = true;
                std::optional<BranchGoal> current = parent;
                for (std::size_t k = 0; k < node->branches.size(); ++k) {
                    const auto& branch = node->branches[k];
                    if (k > 0) {
                        goals_.lines.try_emplace(branch.span.line, Dependence{current, callable});
                    }
                    goals_.predicates[branch.predicate] = Dependence{current, callable};
                    walk(branch.body, BranchGoal{branch.predicate, true}, callable);
                    current = BranchGoal{branch.predicate, false};
                }
                walk(node->orelse, current, callable);
            } else if (const auto* loop = std::get_if<lang::While>(&stmt.node)) {
                branches = true;
                goals_.predicates[loop->predicate] = Dependence{parent, callable};
                walk(loop->body, BranchGoal{loop->predicate, true}, callable);
            }
        }
        return branches;
    }

private:
    ModuleGoals& goals_;
};

}  // namespace

std::string describe(const CoverageGoal& goal)
{
    if (const auto* l = std::get_if<LineGoal>(&goal)) return "line " + std::to_string(l->line);
    if (const auto* b = std::get_if<BranchGoal>(&goal)) {
        return "branch " + std::to_string(b->predicate) + (b->polarity ? " true" : " false");
    }
    return "root " + std::get<RootGoal>(goal).callable;
}

std::optional<Criterion> parse_criterion(std::string_view text)
{
    if (text == "branch") return Criterion::Branch;
    if (text == "line") return Criterion::Line;
    if (text == "both") return Criterion::Both;
    return std::nullopt;
}

std::vector<CoverageGoal> ModuleGoals::for_criterion(Criterion criterion) const
{
    switch (criterion) {
    case Criterion::Branch: return branch_goals;
    case Criterion::Line: return line_goals;
    case Criterion::Both: {
        std::vector<CoverageGoal> all = branch_goals;
        all.insert(all.end(), line_goals.begin(), line_goals.end());
        return all;
    }
    }
    return {};
}

std::optional<BranchGoal> ModuleGoals::parent(const CoverageGoal& goal) const
{
    if (const auto* b = std::get_if<BranchGoal>(&goal)) {
        auto it = predicates.find(b->predicate);
        return it == predicates.end() ? std::nullopt : it->second.parent;
    }
    if (const auto* l = std::get_if<LineGoal>(&goal)) {
        auto it = lines.find(l->line);
        return it == lines.end() ? std::nullopt : it->second.parent;
    }
    return std::nullopt;
}

ModuleGoals build_goals(const lang::AstModule& module)
{
    ModuleGoals goals;
    DependenceWalker walker(goals);
    std::vector<std::string> branchless;
    for (const auto& def : lang::definitions_in_order(module)) {
        if (const auto* const* fn = std::get_if<const lang::FunctionDef*>(&def)) {
            if (!walker.walk((*fn)->body, std::nullopt, (*fn)->name)) branchless.push_back((*fn)->name);
            continue;
        }
        const auto* cls = std::get<const lang::ClassDef*>(def);
        for (const auto& method : cls->methods) {
            const std::string id = cls->name + "." + method.name;
            if (!walker.walk(method.body, std::nullopt, id)) branchless.push_back(id);
        }
    }
    for (lang::PredicateId p : lang::collect_predicates(module)) {
        goals.branch_goals.emplace_back(BranchGoal{p, true});
        goals.branch_goals.emplace_back(BranchGoal{p, false});
    }
    for (auto& id : branchless) {
        goals.branch_goals.emplace_back(RootGoal{std::move(id)});
    }
    for (lang::LineNo line : lang::collect_lines(module)) {
        goals.line_goals.emplace_back(LineGoal{line});
    }
    return goals;
}

}  // namespace testgen::fitness
