#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "testgen/interp/value.hpp"
#include "testgen/lang/ast.hpp"

namespace testgen::interp {

struct ModuleScope {
    std::string name;
    std::shared_ptr<const lang::AstModule> module;
    bool is_target = false;  // events from this module reach the execution listener
    std::unordered_map<std::string, Value> names;
    std::vector<std::unique_ptr<ClassInfo>> classes;
};

// A linked set of modules: every `use` directive resolved against the given
// modules. Flat `use m` imports m's whole namespace (transitively); `use m as a`
// binds the module object to `a`. Immutable after construction, so one Program
// can back any number of interpreters.
class Program {
public:
    // `modules` must contain each module at most once; `target` names the
    // module whose lines/predicates are traced (may be empty).
    Program(std::vector<std::shared_ptr<const lang::AstModule>> modules, const std::string& target);

    Program(const Program&) = delete;
    Program& operator=(const Program&) = delete;

    [[nodiscard]] const ModuleScope* scope(std::string_view name) const;
    [[nodiscard]] const ModuleScope* target() const { return target_; }
    [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }

    // Resolves a dotted path ("Point", "geo.Point") starting at a module's namespace.
    [[nodiscard]] const Value* lookup_path(const ModuleScope& from, std::string_view dotted) const;

private:
    void link(ModuleScope& scope, std::vector<const ModuleScope*>& visiting);

    std::vector<std::unique_ptr<ModuleScope>> scopes_;
    std::unordered_map<std::string, ModuleScope*> by_name_;
    std::unordered_map<const ModuleScope*, bool> linked_;
    const ModuleScope* target_ = nullptr;
    std::vector<std::string> warnings_;
};

}  // namespace testgen::interp
