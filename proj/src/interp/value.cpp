#include "testgen/interp/value.hpp"

#include <cmath>
#include <sstream>

#include "testgen/lang/render.hpp"

namespace testgen::interp {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::NameError: return "NameError";
    case ErrorKind::AttributeError: return "AttributeError";
    case ErrorKind::ZeroDivisionError: return "ZeroDivisionError";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::ValueError: return "ValueError";
    case ErrorKind::OverflowError: return "OverflowError";
    case ErrorKind::RecursionError: return "RecursionError";
    case ErrorKind::AssertionError: return "AssertionError";
    }
    return "Error";
}

bool truthy(const Value& v)
{
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NoneValue>) {
                return false;
            } else if constexpr (std::is_same_v<T, bool>) {
                return x;
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return x != 0;
            } else if constexpr (std::is_same_v<T, double>) {
                return x != 0.0;
            } else if constexpr (std::is_same_v<T, std::string>) {
                return !x.empty();
            } else if constexpr (std::is_same_v<T, ListPtr>) {
                return !x->items.empty();
            } else {
                return true;
            }
        },
        v);
}

std::string type_name(const Value& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NoneValue>) {
                return "NoneType";
            } else if constexpr (std::is_same_v<T, bool>) {
                return "bool";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return "int";
            } else if constexpr (std::is_same_v<T, double>) {
                return "float";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return "str";
            } else if constexpr (std::is_same_v<T, ListPtr>) {
                return "list";
            } else if constexpr (std::is_same_v<T, InstancePtr>) {
                return x->cls->def->name;
            } else {
                return std::visit(
                    [](const auto& t) -> std::string {
                        using C = std::decay_t<decltype(t)>;
                        if constexpr (std::is_same_v<C, FunctionRef>) return "function";
                        else if constexpr (std::is_same_v<C, BoundMethod>) return "method";
                        else if constexpr (std::is_same_v<C, ClassRef>) return "type";
                        else if constexpr (std::is_same_v<C, ModuleRef>) return "module";
                        else return "builtin_function";
                    },
                    x->target);
            }
        },
        v);
}

bool is_numeric(const Value& v)
{
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v)
        || std::holds_alternative<bool>(v);
}

double as_double(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return std::get<bool>(v) ? 1.0 : 0.0;
}

namespace {

bool is_integral(const Value& v)
{
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<bool>(v);
}

std::int64_t as_int(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    return std::get<bool>(v) ? 1 : 0;
}

}  // namespace

bool values_equal(const Value& a, const Value& b)
{
    if (is_numeric(a) && is_numeric(b)) {
        if (is_integral(a) && is_integral(b)) {
            return as_int(a) == as_int(b);
        }
        return as_double(a) == as_double(b);
    }
    if (a.index() != b.index()) {
        return false;
    }
    if (std::holds_alternative<NoneValue>(a)) return true;
    if (const auto* s = std::get_if<std::string>(&a)) return *s == std::get<std::string>(b);
    if (const auto* l = std::get_if<ListPtr>(&a)) {
        const auto& r = std::get<ListPtr>(b);
        if (*l == r) return true;
        if ((*l)->items.size() != r->items.size()) return false;
        for (std::size_t i = 0; i < r->items.size(); ++i) {
            if (!values_equal((*l)->items[i], r->items[i])) return false;
        }
        return true;
    }
    if (const auto* o = std::get_if<InstancePtr>(&a)) return *o == std::get<InstancePtr>(b);
    return std::get<CallablePtr>(a) == std::get<CallablePtr>(b);
}

int compare_values(const Value& a, const Value& b)
{
    if (is_numeric(a) && is_numeric(b)) {
        if (is_integral(a) && is_integral(b)) {
            const auto x = as_int(a);
            const auto y = as_int(b);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        const double x = as_double(a);
        const double y = as_double(b);
        if (std::isnan(x) || std::isnan(y)) {
            // every ordering involving NaN is false; report "incomparable-but-not-less"
            return 2;
        }
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    if (const auto* s = std::get_if<std::string>(&a)) {
        if (const auto* t = std::get_if<std::string>(&b)) {
            const int c = s->compare(*t);
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
    }
    if (const auto* l = std::get_if<ListPtr>(&a)) {
        if (const auto* r = std::get_if<ListPtr>(&b)) {
            const auto& x = (*l)->items;
            const auto& y = (*r)->items;
            for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
                if (values_equal(x[i], y[i])) continue;
                return compare_values(x[i], y[i]);
            }
            return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
        }
    }
    throw RuntimeError(ErrorKind::TypeError,
                       "'<' not supported between instances of '" + type_name(a) + "' and '" + type_name(b) + "'");
}

namespace {

void repr_into(std::ostream& os, const Value& v, int depth)
{
    std::visit(
        [&os, depth](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NoneValue>) {
                os << "None";
            } else if constexpr (std::is_same_v<T, bool>) {
                os << (x ? "True" : "False");
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                os << x;
            } else if constexpr (std::is_same_v<T, double>) {
                os << lang::format_float(x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                os << x;
            } else if constexpr (std::is_same_v<T, ListPtr>) {
                if (depth > 16) {
                    os << "[...]";
                    return;
                }
                os << '[';
                for (std::size_t i = 0; i < x->items.size(); ++i) {
                    if (i) os << ", ";
                    if (const auto* s = std::get_if<std::string>(&x->items[i])) {
                        os << lang::quote_string(*s);
                    } else {
                        repr_into(os, x->items[i], depth + 1);
                    }
                }
                os << ']';
            } else if constexpr (std::is_same_v<T, InstancePtr>) {
                os << '<' << x->cls->def->name << " object>";
            } else {
                os << "<callable>";
            }
        },
        v);
}

}  // namespace

std::string repr(const Value& v)
{
    std::ostringstream os;
    repr_into(os, v, 0);
    return os.str();
}

}  // namespace testgen::interp
