#include "dpclab/examples.hpp"

#include <algorithm>
#include <map>

#include "dpclab/parse.hpp"

namespace dpclab {

namespace {

const std::map<std::string, std::string>& example_sources() {
    static const std::map<std::string, std::string> sources = {
        {"Ra",
         "(VAR x y z w)\n"
         "(RULES\n"
         "  ∘(i(x),∘(y,z)) -> ∘(f(x,i(x)),∘(i(i(y)),z))\n"
         "  ∘(i(x),∘(y,∘(z,w))) -> ∘(f(x,i(x)),∘(z,∘(y,w)))\n"
         "  i(x) -> x\n"
         "  f(x,y) -> x\n"
         ")\n"},
        {"Rb",
         "(VAR x)\n"
         "(RULES\n"
         "  f(x) -> g(c,x)\n"
         "  g(x,x) -> h(x,x)\n"
         "  c -> d\n"
         ")\n"},
        {"Rnonll",
         "(VAR x)\n"
         "(RULES\n"
         "  f(x,x) -> g(x)\n"
         ")\n"},
        {"Rd",
         "(VAR x)\n"
         "(RULES\n"
         "  f(s(x)) -> s(f(f(x)))\n"
         ")\n"},
        {"Re",
         "(VAR x)\n"
         "(RULES\n"
         "  d(s(x)) -> s(s(d(x)))\n"
         ")\n"},
        {"Rde",
         "(VAR x)\n"
         "(RULES\n"
         "  f(s(x)) -> s(f(f(x)))\n"
         "  f(x) -> c(x,x)\n"
         ")\n"},
        {"Rebin",
         "(VAR x y)\n"
         "(RULES\n"
         "  d(0) -> 0\n"
         "  d(s(x)) -> s(s(d(x)))\n"
         "  e(0,x) -> x\n"
         "  e(s(x),y) -> e(x,d(y))\n"
         ")\n"},
        {"Rack",
         "(VAR x y z w)\n"
         "(RULES\n"
         "  ∘(i(x),∘(y,z)) -> ∘(x,∘(i(i(y)),z))\n"
         "  ∘(i(x),∘(y,∘(z,w))) -> ∘(x,∘(z,∘(y,w)))\n"
         ")\n"},
    };
    return sources;
}

std::string comp_name(int m) { return "∘" + std::to_string(m); }

Trs make_rl(int l) {
    if (l < 2) throw BadParams("Rl: the parameter must be at least 2");
    Term x = make_var("x"), y = make_var("y"), z = make_var("z"), w = make_var("w");
    std::vector<Rule> rules;
    for (int m = 2; m <= l; ++m) {
        Term lhs = make_fun(comp_name(m), {make_fun("i", {x}), make_fun(comp_name(m - 1), {y, z})});
        Term rhs = make_fun(comp_name(m),
                            {x, make_fun(comp_name(m - 1), {make_fun("i", {make_fun("i", {y})}), z})});
        rules.push_back(Rule{lhs, rhs});
    }
    for (int m = 3; m <= l; ++m) {
        Term lhs = make_fun(comp_name(m),
                            {make_fun("i", {x}),
                             make_fun(comp_name(m - 1), {y, make_fun(comp_name(m - 2), {z, w})})});
        Term rhs = make_fun(comp_name(m),
                            {x, make_fun(comp_name(m - 1), {z, make_fun(comp_name(m - 2), {y, w})})});
        rules.push_back(Rule{lhs, rhs});
    }
    return make_trs(std::move(rules));
}

}  // namespace

const std::vector<std::string>& builtin_example_names() {
    static const std::vector<std::string> names = {"Ra",  "Rb",    "Rnonll", "Rd",  "Re",
                                                   "Rde", "Rebin", "Rack",   "Rl"};
    return names;
}

bool is_builtin_example(const std::string& name) {
    const auto& names = builtin_example_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Trs builtin_example(const std::string& name, int param) {
    if (name == "Rl") return make_rl(param);
    auto it = example_sources().find(name);
    if (it == example_sources().end()) throw UsageError("unknown example '" + name + "'");
    return parse_trs(it->second);
}

std::string builtin_example_source(const std::string& name) {
    auto it = example_sources().find(name);
    return it == example_sources().end() ? std::string() : it->second;
}

Term composition_start_term(int m, int n) {
    Term t = make_fun("e");
    Term chain = make_fun("e");
    for (int j = 1; j <= m + 1; ++j) chain = make_fun(comp_name(j), {make_fun("e"), chain});
    for (int i = 0; i < 2 * (n + 1); ++i) t = make_fun("i", {t});
    return make_fun(comp_name(m + 2), {t, chain});
}

namespace {

const std::vector<BuiltinTrace>& trace_table() {
    static const std::vector<BuiltinTrace> traces = {
        {"fig1", "Rb",
         "f(f(c))\n"
         "@1 #0\n"
         "f(g(c,c))\n"
         "@1 #1\n"
         "f(h(c,c))\n"
         "@1.2 #2\n"
         "f(h(c,d))\n"},
        {"rdtree", "Rd",
         "f(s(s(0)))\n"
         "@ #0\n"
         "s(f(f(s(0))))\n"
         "@1.1 #0\n"
         "s(f(s(f(f(0)))))\n"
         "@1 #0\n"
         "s(s(f(f(f(f(0))))))\n"},
        {"rechain", "Re",
         "d(s(s(0)))\n"
         "@ #0\n"
         "s(s(d(s(0))))\n"
         "@1.1 #0\n"
         "s(s(s(s(d(0)))))\n"},
        {"rde1", "Rde",
         "f(s(0))\n"
         "@ #0\n"
         "s(f(f(0)))\n"},
        {"rde2", "Rde",
         "f(s(s(0)))\n"
         "@ #0\n"
         "s(f(f(s(0))))\n"
         "@1.1 #0\n"
         "s(f(s(f(f(0)))))\n"
         "@1 #0\n"
         "s(s(f(f(f(f(0))))))\n"},
        {"rde3", "Rde",
         "f(s(s(s(0))))\n"
         "@ #0\n"
         "s(f(f(s(s(0)))))\n"
         "@1.1 #0\n"
         "s(f(s(f(f(s(0))))))\n"
         "@1.1.1.1 #0\n"
         "s(f(s(f(s(f(f(0)))))))\n"
         "@1.1.1 #0\n"
         "s(f(s(s(f(f(f(f(0))))))))\n"
         "@1 #0\n"
         "s(s(f(f(s(f(f(f(f(0)))))))))\n"
         "@1.1.1 #0\n"
         "s(s(f(s(f(f(f(f(f(f(0))))))))))\n"
         "@1.1 #0\n"
         "s(s(s(f(f(f(f(f(f(f(f(0)))))))))))\n"},
    };
    return traces;
}

}  // namespace

const std::vector<BuiltinTrace>& builtin_traces() { return trace_table(); }

bool is_builtin_trace(const std::string& name) {
    for (const BuiltinTrace& t : trace_table())
        if (t.name == name) return true;
    return false;
}

Derivation builtin_trace(const std::string& name) {
    for (const BuiltinTrace& t : trace_table())
        if (t.name == name) return parse_trace(t.source, builtin_example(t.example));
    throw UsageError("unknown trace '" + name + "'");
}

}  // namespace dpclab
