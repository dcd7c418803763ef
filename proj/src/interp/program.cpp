#include "testgen/interp/program.hpp"

#include <algorithm>

namespace testgen::interp {

Program::Program(std::vector<std::shared_ptr<const lang::AstModule>> modules, const std::string& target)
{
    for (auto& module : modules) {
        auto scope = std::make_unique<ModuleScope>();
        scope->name = module->name;
        scope->module = module;
        scope->is_target = !target.empty() && module->name == target;
        for (const auto& f : module->functions) {
            auto callable = std::make_shared<CallableObject>();
            callable->target = FunctionRef{&f, scope.get(), nullptr};
            scope->names[f.name] = CallablePtr(callable);
        }
        for (const auto& c : module->classes) {
            auto info = std::make_unique<ClassInfo>();
            info->def = &c;
            info->scope = scope.get();
            auto callable = std::make_shared<CallableObject>();
            callable->target = ClassRef{info.get()};
            scope->names[c.name] = CallablePtr(callable);
            scope->classes.push_back(std::move(info));
        }
        if (scope->is_target) {
            target_ = scope.get();
        }
        by_name_[scope->name] = scope.get();
        scopes_.push_back(std::move(scope));
    }
    std::vector<const ModuleScope*> visiting;
    for (auto& scope : scopes_) {
        link(*scope, visiting);
    }
}

void Program::link(ModuleScope& scope, std::vector<const ModuleScope*>& visiting)
{
    if (linked_[&scope]) {
        return;
    }
    visiting.push_back(&scope);
    for (const auto& use : scope.module->uses) {
        auto it = by_name_.find(use.module);
        if (it == by_name_.end()) {
            warnings_.push_back("module '" + scope.name + "': cannot resolve 'use " + use.module + "'");
            continue;
        }
        ModuleScope& used = *it->second;
        if (!use.alias.empty()) {
            auto callable = std::make_shared<CallableObject>();
            callable->target = ModuleRef{&used};
            scope.names.try_emplace(use.alias, CallablePtr(callable));
            continue;
        }
        // Import cycles see only what the partner has linked so far.
        if (std::find(visiting.begin(), visiting.end(), &used) == visiting.end()) {
            link(used, visiting);
        }
        for (const auto& [name, value] : used.names) {
            scope.names.try_emplace(name, value);
        }
    }
    visiting.pop_back();
    linked_[&scope] = true;
}

const ModuleScope* Program::scope(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : it->second;
}

const Value* Program::lookup_path(const ModuleScope& from, std::string_view dotted) const
{
    const ModuleScope* scope = &from;
    while (true) {
        const auto dot = dotted.find('.');
        const std::string head(dotted.substr(0, dot));
        auto it = scope->names.find(head);
        if (it == scope->names.end()) {
            return nullptr;
        }
        if (dot == std::string_view::npos) {
            return &it->second;
        }
        const auto* callable = std::get_if<CallablePtr>(&it->second);
        if (!callable) {
            return nullptr;
        }
        const auto* module = std::get_if<ModuleRef>(&(*callable)->target);
        if (!module) {
            return nullptr;
        }
        scope = module->scope;
        dotted = dotted.substr(dot + 1);
    }
}

}  // namespace testgen::interp
