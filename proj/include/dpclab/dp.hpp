#pragma once

#include <optional>
#include <variant>

#include "dpclab/rewrite.hpp"
#include "dpclab/trs.hpp"

namespace dpclab {

// t♯: the root symbol is replaced by its marked variant "f#". Variables are
// left untouched. '#' is rejected by the parser, so marked symbols can never
// collide with user symbols.
Term mark_root(Term t);
std::string marked_name(const std::string& name);

struct DpProblem {
    Trs base;
    std::vector<Rule> pairs;                      // over the marked signature
    std::map<std::string, int> marked_signature;  // base signature ∪ {f#}

    // the pairs as a standalone system, e.g. for relative heights
    Trs pairs_trs() const;
    Trs pairs_trs(const std::vector<int>& indices) const;
};

// Pairs l♯ -> u♯ for l -> r in the base, u a subterm of r with defined root
// that is not a proper subterm of l; enumerated in (rule order, position-lex
// order of u within r).
DpProblem dependency_pairs(const Trs& trs);

// Argument filtering: per symbol either a single argument position
// (collapsing) or a strictly increasing list of kept positions (1-based).
struct ArgumentFiltering {
    std::map<std::string, std::variant<int, std::vector<int>>> pi;
};

Term apply_filtering(const ArgumentFiltering& af, Term t);
Rule apply_filtering(const ArgumentFiltering& af, const Rule& r);
Trs apply_filtering(const ArgumentFiltering& af, const Trs& trs);
DpProblem apply_filtering(const ArgumentFiltering& af, const DpProblem& dp);

// Syntactic unification, used by the dependency graph estimation.
std::optional<Substitution> unify(Term a, Term b);

struct SccInfo {
    std::vector<int> members;  // pair indices
    bool trivial;
    int rank;
};

struct DependencyGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<SccInfo> sccs;     // in enumeration order (by smallest member)
    std::vector<int> scc_of;       // pair index -> index into sccs
};

// Estimated dependency graph: edge s->t ⟹ u->v whenever REN(CAP(t)) unifies
// with u, where CAP replaces defined-rooted proper subterms by fresh
// variables and REN makes all variable occurrences fresh. SCCs carry the
// reachability-respecting rank assignment; trivial SCCs are ranked too.
DependencyGraph estimated_dependency_graph(const DpProblem& dp);

struct UsableRulesResult {
    std::vector<int> usable;  // indices into base rules
    Rule ce_first;            // c_e#cons(x,y) -> x
    Rule ce_second;           // c_e#cons(x,y) -> y
    std::optional<bool> exact_check;
};

// Least set closed under: a rule is usable if its root symbol occurs in a
// pair right-hand side, or in the right-hand side of a usable rule.
UsableRulesResult usable_rules(const DpProblem& dp);

// Bounded-search confirmation that no non-usable rule's left-hand side
// instance is reachable from any pair rhs instance (ground instances up to
// size_cap). Advisory, desk scale only.
bool usable_rules_exact_check(const DpProblem& dp, const UsableRulesResult& ur, int size_cap,
                              size_t budget = kDefaultBudget);

std::string dg_to_dot(const DpProblem& dp, const DependencyGraph& dg);
std::string dg_to_json(const DependencyGraph& dg);

enum class ComplexityMode { Dc, DpComplexity, SccComplexity };

struct ComplexityTable {
    std::vector<std::pair<int, long long>> rows;  // (size, value)
};

// For each m <= n, the maximum of the respective height over all ground
// terms of size <= m. Dc: dh(t, ->R); DpComplexity: dh(t♯, DP(R)/R);
// SccComplexity: max over all SCCs i of dh(t♯, P_i/R), floored at 1.
ComplexityTable empirical_complexity(const Trs& trs, int n, ComplexityMode mode,
                                     size_t budget = kDefaultBudget);

}  // namespace dpclab
