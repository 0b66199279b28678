#include "dpclab/trs.hpp"

#include <algorithm>

namespace dpclab {

std::string rule_to_string(const Rule& r) {
    return term_to_string(r.lhs) + " -> " + term_to_string(r.rhs);
}

Trs make_trs(std::vector<Rule> rules) {
    Trs trs;
    trs.rules = std::move(rules);
    for (const Rule& r : trs.rules) {
        if (is_var(r.lhs))
            throw IllFormedRule("variable left-hand side in rule " + rule_to_string(r));
        std::set<Sym> lv = variables_of(r.lhs);
        for (Sym v : variables_of(r.rhs))
            if (!lv.count(v))
                throw IllFormedRule("variable '" + symbol_name(v) +
                                    "' occurs only in the right-hand side of rule " +
                                    rule_to_string(r));
        collect_function_symbols(r.lhs, trs.signature);
        collect_function_symbols(r.rhs, trs.signature);
        // left-linearity: every lhs variable occurs exactly once
        std::map<Sym, int> occ;
        for (const Position& p : var_positions(r.lhs)) occ[subterm_at(r.lhs, p)->sym]++;
        for (auto& [v, n] : occ)
            if (n > 1) trs.left_linear = false;
    }
    for (const Rule& r : trs.rules) trs.defined.insert(symbol_name(root(r.lhs)));
    for (auto& [name, arity] : trs.signature) {
        if (!trs.defined.count(name)) trs.constructors.insert(name);
        if (arity > 1) trs.is_srs = false;
    }
    for (int i = 0; i < static_cast<int>(trs.rules.size()); ++i)
        trs.rules_by_root[root(trs.rules[static_cast<size_t>(i)].lhs)].push_back(i);
    return trs;
}

Trs merge_trs(const Trs& a, const Trs& b) {
    std::vector<Rule> rules = a.rules;
    rules.insert(rules.end(), b.rules.begin(), b.rules.end());
    return make_trs(std::move(rules));
}

int branching_constant(const Trs& trs) {
    int c = 2;
    for (const Rule& r : trs.rules) c = std::max(c, static_cast<int>(r.rhs->depth));
    return c;
}

}  // namespace dpclab
