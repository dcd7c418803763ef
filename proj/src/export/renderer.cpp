#include "testgen/export/renderer.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "testgen/lang/render.hpp"

namespace testgen::exporter {

namespace {

using namespace testgen::testcase;

std::string primitive_literal(const PrimitiveValue& value)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, testcase::NoneValue>) return "None";
            else if constexpr (std::is_same_v<T, bool>) return v ? "True" : "False";
            else if constexpr (std::is_same_v<T, std::int64_t>) return lang::format_int(v);
            else if constexpr (std::is_same_v<T, double>) return lang::format_float(v);
            else return lang::quote_string(v);
        },
        value);
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

class TestWriter {
public:
    TestWriter(const TestCaseChromosome& chromosome, const analysis::TestCluster& cluster)
        : chromosome_(chromosome), cluster_(cluster)
    {
    }

    void write(std::ostream& os)
    {
        const TestCase& test = chromosome_.test;
        std::vector<std::vector<const assertgen::Assertion*>> after(test.size());
        for (const auto& a : test.assertions) {
            if (a.statement < test.size()) after[a.statement].push_back(&a);
        }
        if (test.empty()) {
            os << "    pass\n";
            return;
        }
        for (std::size_t i = 0; i < test.size(); ++i) {
            names_.push_back(fresh_name(i));
            os << "    " << names_[i] << " = " << expression(test.statements[i]) << "\n";
            for (const auto* a : after[i]) {
                os << "    assert " << condition(*a) << "\n";
            }
        }
    }

private:
    std::string fresh_name(std::size_t i)
    {
        std::string type;
        if (chromosome_.result && i < chromosome_.result->value_types.size()) {
            type = chromosome_.result->value_types[i];
        }
        if (type.empty()) {
            type = static_type(chromosome_.test, i, cluster_);
            if (type == "none") type = "NoneType";
        }
        if (const auto dot = type.rfind('.'); dot != std::string::npos) type = type.substr(dot + 1);
        const std::string base = type.empty() ? "var" : snake_case(type);
        return base + "_" + std::to_string(counters_[base]++);
    }

    std::vector<std::string> args(const std::vector<VarRef>& refs) const
    {
        std::vector<std::string> out;
        for (VarRef r : refs) out.push_back(names_.at(r));
        return out;
    }

    std::string expression(const Statement& statement) const
    {
        if (const auto* p = std::get_if<PrimitiveStatement>(&statement)) return primitive_literal(p->value);
        if (const auto* l = std::get_if<ListStatement>(&statement)) return "[" + join(args(l->elements)) + "]";
        if (const auto* m = std::get_if<MethodStatement>(&statement)) {
            return names_.at(m->receiver) + "." + cluster_.callables.at(m->callable).name + "(" + join(args(m->args))
                   + ")";
        }
        std::size_t callable = 0;
        std::vector<VarRef> refs;
        if (const auto* c = std::get_if<ConstructorStatement>(&statement)) {
            callable = c->callable;
            refs = c->args;
        } else {
            const auto& f = std::get<FunctionStatement>(statement);
            callable = f.callable;
            refs = f.args;
        }
        return std::string(kModuleAlias) + "." + cluster_.callables.at(callable).access_path + "(" + join(args(refs))
               + ")";
    }

    std::string condition(const assertgen::Assertion& a) const
    {
        std::string subject = names_.at(a.variable);
        if (a.kind == assertgen::AssertionKind::AttributeEquals) subject += "." + a.attribute;
        if (std::holds_alternative<interp::NoneValue>(a.expected.value)) return subject + " == None";
        if (std::holds_alternative<double>(a.expected.value)) {
            return "abs(" + subject + " - " + render_literal(a.expected) + ") <= 1e-06";
        }
        return subject + " == " + render_literal(a.expected);
    }

    const TestCaseChromosome& chromosome_;
    const analysis::TestCluster& cluster_;
    std::vector<std::string> names_;
    std::map<std::string, int> counters_;
};

}  // namespace

std::string snake_case(const std::string& name)
{
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (std::isupper(static_cast<unsigned char>(c))) {
            const bool after_lower = i > 0 && (std::islower(static_cast<unsigned char>(name[i - 1]))
                                               || std::isdigit(static_cast<unsigned char>(name[i - 1])));
            const bool acronym_end = i > 0 && std::isupper(static_cast<unsigned char>(name[i - 1]))
                                     && i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
            if (after_lower || acronym_end) out += '_';
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            out += c;
        }
    }
    return out;
}

std::string render_literal(const interp::Snapshot& snapshot)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, interp::NoneValue>) return "None";
            else if constexpr (std::is_same_v<T, bool>) return v ? "True" : "False";
            else if constexpr (std::is_same_v<T, std::int64_t>) return lang::format_int(v);
            else if constexpr (std::is_same_v<T, double>) return lang::format_float(v);
            else if constexpr (std::is_same_v<T, std::string>) return lang::quote_string(v);
            else if constexpr (std::is_same_v<T, std::vector<interp::Snapshot>>) {
                std::vector<std::string> items;
                for (const auto& item : v) items.push_back(render_literal(item));
                return "[" + join(items) + "]";
            } else {
                return "None";
            }
        },
        snapshot.value);
}

RenderedTestModule FlatFunctionStyle::render(const TestSuiteChromosome& suite, const std::string& module_name,
                                             const analysis::TestCluster& cluster) const
{
    RenderedTestModule out;
    out.module_name = "test_" + module_name;
    std::ostringstream os;
    os << "use " << module_name << " as " << kModuleAlias << "\n";
    for (std::size_t i = 0; i < suite.tests.size(); ++i) {
        const std::string name = "test_case_" + std::to_string(i);
        out.test_names.push_back(name);
        os << "\n\ndef " << name << "():\n";
        TestWriter(suite.tests[i], cluster).write(os);
    }
    out.text = os.str();
    return out;
}

RenderedTestModule render(const TestSuiteChromosome& suite, const std::string& module_name,
                          const analysis::TestCluster& cluster)
{
    return FlatFunctionStyle().render(suite, module_name, cluster);
}

std::filesystem::path output_file(const std::filesystem::path& dir, const std::string& module_name)
{
    return dir / ("test_" + module_name + ".mdyn");
}

std::filesystem::path write_test_module(const RenderedTestModule& rendered, const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ExportError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    const auto path = dir / (rendered.module_name + ".mdyn");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ExportError("cannot write " + path.string());
    }
    out << rendered.text;
    if (!out.flush()) {
        throw ExportError("failed writing " + path.string());
    }
    return path;
}

}  // namespace testgen::exporter
