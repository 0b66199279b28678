#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dpclab/term.hpp"

namespace dpclab {

// Rewrite rule l -> r with l not a variable and Var(r) ⊆ Var(l).
struct Rule {
    Term lhs;
    Term rhs;

    bool operator==(const Rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

std::string rule_to_string(const Rule& r);

struct Trs {
    std::vector<Rule> rules;
    std::map<std::string, int> signature;  // function symbol -> arity
    std::set<std::string> defined;
    std::set<std::string> constructors;
    bool is_srs = true;       // all arities <= 1
    bool left_linear = true;  // no repeated variable in any lhs

    // rule indices grouped by lhs root symbol
    std::unordered_map<Sym, std::vector<int>> rules_by_root;

    bool is_defined(Sym s) const { return defined.count(symbol_name(s)) > 0; }
    bool in_signature(Sym s) const { return signature.count(symbol_name(s)) > 0; }
};

// Builds a Trs from rules: infers the signature, checks arity consistency
// (ArityClash) and rule well-formedness (IllFormedRule).
Trs make_trs(std::vector<Rule> rules);

// Union of two systems over a merged signature (arity clashes rejected).
Trs merge_trs(const Trs& a, const Trs& b);

// C = max({2} ∪ {depth(r) | l -> r ∈ R})
int branching_constant(const Trs& trs);

}  // namespace dpclab
