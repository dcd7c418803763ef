#include "testgen/analysis/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "testgen/lang/parser.hpp"

namespace testgen::analysis {

namespace {

using interp::ClassInfo;
using interp::ModuleScope;
using lang::TypeAnnotation;

struct VisibleClass {
    std::string path;
    const ClassInfo* info = nullptr;
};

// Classes reachable by name from `scope`, each under the first path that reaches it.
void collect_visible(const ModuleScope& scope, const std::string& prefix, std::vector<const ModuleScope*>& stack,
                     std::vector<VisibleClass>& out)
{
    std::vector<std::string> names;
    names.reserve(scope.names.size());
    for (const auto& entry : scope.names) {
        names.push_back(entry.first);
    }
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
        const auto* callable = std::get_if<interp::CallablePtr>(&scope.names.at(name));
        if (!callable) {
            continue;
        }
        if (const auto* cls = std::get_if<interp::ClassRef>(&(*callable)->target)) {
            const bool known = std::any_of(out.begin(), out.end(),
                                           [&](const VisibleClass& v) { return v.info == cls->cls; });
            if (!known) {
                out.push_back({prefix + name, cls->cls});
            }
        } else if (const auto* mod = std::get_if<interp::ModuleRef>(&(*callable)->target)) {
            if (std::find(stack.begin(), stack.end(), mod->scope) != stack.end()) {
                continue;
            }
            stack.push_back(mod->scope);
            collect_visible(*mod->scope, prefix + name + ".", stack, out);
            stack.pop_back();
        }
    }
}

class Builder {
public:
    Builder(const interp::Program& program, bool use_annotations, TypeInferenceProvider* provider)
        : program_(program), use_annotations_(use_annotations), provider_(provider)
    {
    }

    TestCluster build()
    {
        for (const char* name : kBuiltinTypeNames) {
            cluster_.type_registry.push_back({TypeInfo{name, TypeOrigin::Builtin}, std::nullopt, {}});
        }
        const ModuleScope* target = program_.target();
        if (!target) {
            return std::move(cluster_);
        }

        std::vector<VisibleClass> visible;
        std::vector<const ModuleScope*> stack{target};
        collect_visible(*target, "", stack, visible);
        // Own classes first in source order, then context classes by path.
        std::sort(visible.begin(), visible.end(), [&](const VisibleClass& a, const VisibleClass& b) {
            const bool own_a = a.info->scope == target;
            const bool own_b = b.info->scope == target;
            if (own_a != own_b) return own_a;
            if (own_a) return a.info->def->span.line < b.info->def->span.line;
            return a.path < b.path;
        });
        for (const auto& v : visible) {
            class_paths_[v.info] = v.path;
        }

        // Module-under-test callables in source order.
        for (const auto& def : lang::definitions_in_order(*target->module)) {
            if (const auto* const* fn = std::get_if<const lang::FunctionDef*>(&def)) {
                GenericCallable c;
                c.kind = CallableKind::Function;
                c.name = (*fn)->name;
                c.access_path = (*fn)->name;
                c.under_test = true;
                fill_signature(c, **fn, *target, 0);
                cluster_.accessible.push_back(add(std::move(c)));
            }
            else {
                const auto* cls = std::get<const lang::ClassDef*>(def);
                const ClassInfo* info = find_info(*target, cls);
                add_class(info, class_paths_.at(info), true);
            }
        }
        for (const auto& v : visible) {
            if (v.info->scope != target) {
                add_class(v.info, v.path, false);
            }
        }
        return std::move(cluster_);
    }

private:
    static const ClassInfo* find_info(const ModuleScope& scope, const lang::ClassDef* def)
    {
        for (const auto& info : scope.classes) {
            if (info->def == def) return info.get();
        }
        return nullptr;
    }

    std::size_t add(GenericCallable c)
    {
        cluster_.callables.push_back(std::move(c));
        return cluster_.callables.size() - 1;
    }

    void add_class(const ClassInfo* info, const std::string& path, bool under_test)
    {
        TypeEntry entry;
        entry.info = {path, under_test ? TypeOrigin::ModuleUnderTest : TypeOrigin::Context};

        GenericCallable ctor;
        ctor.kind = CallableKind::Constructor;
        ctor.name = info->def->name;
        ctor.owner = path;
        ctor.access_path = path;
        ctor.under_test = under_test;
        if (const auto* init = info->def->find_method("__init__")) {
            fill_signature(ctor, *init, *info->scope, 1);
        }
        ctor.return_type = DeclaredType{path, {}};
        entry.constructor = add(std::move(ctor));
        if (under_test) {
            cluster_.accessible.push_back(*entry.constructor);
        }

        for (const auto& method : info->def->methods) {
            if (method.name.rfind("__", 0) == 0 || method.params.empty()) {
                continue;
            }
            GenericCallable m;
            m.kind = CallableKind::Method;
            m.name = method.name;
            m.owner = path;
            m.access_path = method.name;
            m.under_test = under_test;
            fill_signature(m, method, *info->scope, 1);
            const std::size_t index = add(std::move(m));
            entry.modifiers.push_back(index);
            if (under_test) {
                cluster_.accessible.push_back(index);
            }
        }
        cluster_.type_registry.push_back(std::move(entry));
    }

    void fill_signature(GenericCallable& c, const lang::FunctionDef& fn, const ModuleScope& scope, std::size_t skip)
    {
        for (std::size_t i = skip; i < fn.params.size(); ++i) {
            CallableParam p;
            p.name = fn.params[i].name;
            if (use_annotations_ && fn.params[i].annotation) {
                p.type = resolve(*fn.params[i].annotation, scope);
            }
            c.params.push_back(std::move(p));
        }
        if (use_annotations_ && fn.return_annotation && c.kind != CallableKind::Constructor) {
            c.return_type = resolve(*fn.return_annotation, scope);
        }
        if (provider_) {
            for (std::size_t i = 0; i < c.params.size(); ++i) {
                if (!c.params[i].type) {
                    c.params[i].type = provider_->infer_parameter(c, i);
                }
            }
        }
    }

    std::optional<DeclaredType> resolve(const TypeAnnotation& ann, const ModuleScope& scope)
    {
        switch (ann.kind) {
        case TypeAnnotation::Kind::Int: return DeclaredType{"int", {}};
        case TypeAnnotation::Kind::Float: return DeclaredType{"float", {}};
        case TypeAnnotation::Kind::Str: return DeclaredType{"str", {}};
        case TypeAnnotation::Kind::Bool: return DeclaredType{"bool", {}};
        case TypeAnnotation::Kind::None: return DeclaredType{"none", {}};
        case TypeAnnotation::Kind::List: {
            DeclaredType t{"list", {}};
            if (ann.element) {
                if (auto element = resolve(*ann.element, scope)) {
                    t.element = element->name;
                }
            }
            return t;
        }
        case TypeAnnotation::Kind::ClassRef: {
            const interp::Value* value = program_.lookup_path(scope, ann.class_name);
            const auto* callable = value ? std::get_if<interp::CallablePtr>(value) : nullptr;
            const auto* cls = callable ? std::get_if<interp::ClassRef>(&(*callable)->target) : nullptr;
            if (cls) {
                auto it = class_paths_.find(cls->cls);
                if (it != class_paths_.end()) {
                    return DeclaredType{it->second, {}};
                }
            }
            if (cluster_.unresolved.insert(ann.class_name).second) {
                cluster_.warnings.push_back("unresolved type annotation '" + ann.class_name + "'");
            }
            return std::nullopt;
        }
        }
        return std::nullopt;
    }

    const interp::Program& program_;
    bool use_annotations_;
    TypeInferenceProvider* provider_;
    TestCluster cluster_;
    std::map<const ClassInfo*, std::string> class_paths_;
};

}  // namespace

std::string GenericCallable::id() const
{
    switch (kind) {
    case CallableKind::Function: return name;
    case CallableKind::Constructor: return owner;
    case CallableKind::Method: return owner + "." + name;
    }
    return name;
}

const TypeEntry* TestCluster::find_type(std::string_view name) const
{
    for (const auto& entry : type_registry) {
        if (entry.info.name == name) return &entry;
    }
    return nullptr;
}

std::vector<std::shared_ptr<const lang::AstModule>> Project::all_modules() const
{
    std::vector<std::shared_ptr<const lang::AstModule>> out{target};
    out.insert(out.end(), context.begin(), context.end());
    return out;
}

Project load_project(const std::filesystem::path& dir, const std::string& module_name)
{
    auto target = std::make_shared<const lang::AstModule>(lang::parse_module(lang::read_source(dir, module_name)));
    Project project;
    project.target = target;

    std::set<std::string> seen{module_name};
    std::deque<std::string> pending;
    const auto enqueue = [&](const lang::AstModule& m) {
        for (const auto& use : m.uses) {
            if (seen.insert(use.module).second) pending.push_back(use.module);
        }
    };
    enqueue(*target);
    while (!pending.empty()) {
        const std::string name = pending.front();
        pending.pop_front();
        try {
            auto module = std::make_shared<const lang::AstModule>(lang::parse_module(lang::read_source(dir, name)));
            enqueue(*module);
            project.context.push_back(std::move(module));
        } catch (const lang::SyntaxError& e) {
            project.warnings.push_back("skipping context module '" + name + "': line " + std::to_string(e.line())
                                       + ": " + e.message());
        } catch (const std::exception& e) {
            project.warnings.push_back("skipping context module '" + name + "': " + e.what());
        }
    }
    return project;
}

Project make_project(std::shared_ptr<const lang::AstModule> target,
                     std::vector<std::shared_ptr<const lang::AstModule>> context)
{
    Project project;
    project.target = std::move(target);
    project.context = std::move(context);
    return project;
}

TestCluster build_test_cluster(const interp::Program& program, bool use_annotations, TypeInferenceProvider* provider)
{
    return Builder(program, use_annotations, provider).build();
}

TestCluster build_test_cluster(const Project& project, bool use_annotations)
{
    const interp::Program program(project.all_modules(), project.target->name);
    NoTypeInference none;
    TestCluster cluster = build_test_cluster(program, use_annotations, &none);
    cluster.warnings.insert(cluster.warnings.begin(), project.warnings.begin(), project.warnings.end());
    cluster.warnings.insert(cluster.warnings.end(), program.warnings().begin(), program.warnings().end());
    return cluster;
}

TypeInfo candidates_for_type(const TestCluster& cluster, const std::optional<DeclaredType>& declared, Rng& rng)
{
    if (declared) {
        if (const auto* entry = cluster.find_type(declared->name)) {
            return entry->info;
        }
    }
    return cluster.type_registry[pick_index(rng, cluster.type_registry.size())].info;
}

}  // namespace testgen::analysis
