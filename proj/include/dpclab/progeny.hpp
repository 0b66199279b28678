#pragma once

#include <map>
#include <set>

#include "dpclab/dp.hpp"
#include "dpclab/rewrite.hpp"

namespace dpclab {

// Progeny relation of a single step s ->(p', l->r) t. For p in Pos(s) the
// progenies of p in t are:
//   {p}                                      if p < p' or p ∥ p'
//   {p'·q3·q2 | r|q3 = l|q1}                 if p = p'·q1·q2, q1 in VPos(l)
//   {p'·q2 | r|q2 = l|q1}                    if p = p'·q1, q1 in FPos(l)\{ε}
//   {p·q1 | r|q1 ⋬ l, q1 in FPos(r)}         if p = p'
// Progenitors are the inverse relation. Descendants drop the last two cases
// (the redex contributes nothing, function positions of l map to nothing).
std::set<Position> progenies_of_step(const Trs& trs, const RewriteStep& step,
                                     const Position& p);
std::set<Position> progenitors_of_step(const Trs& trs, const RewriteStep& step,
                                       const Position& q);
std::set<Position> descendants_of_step(const Trs& trs, const RewriteStep& step,
                                       const Position& p);

std::set<Position> progenies_of_derivation(const Trs& trs, const Derivation& d,
                                           const Position& p);
std::set<Position> progenitors_of_derivation(const Trs& trs, const Derivation& d,
                                             const Position& q);

// Eagerly computed per-derivation data: full progeny/progenitor maps per step
// and the main branch of every term. Branch tie-breaks are lexicographic
// ("leftmost").
struct DerivationAnalysis {
    const Trs* trs = nullptr;
    Derivation derivation;
    // per step i (0-based): position -> sorted progenies / progenitors
    std::vector<std::map<Position, std::vector<Position>>> child;
    std::vector<std::map<Position, std::vector<Position>>> anc;
    // per term t_1..t_n (index 0-based: main_branch[i] is the branch of t_{i+1})
    std::vector<Branch> main_branch;

    Term term(int i) const { return derivation.term(i); }          // 1-based
    const Branch& branch(int i) const {                            // 1-based
        return main_branch[static_cast<size_t>(i - 1)];
    }
    Position redex(int i) const {                                  // step t_i -> t_{i+1}
        return derivation.steps[static_cast<size_t>(i - 1)].redex;
    }
    int term_count() const { return derivation.term_count(); }
};

DerivationAnalysis analyze(const Trs& trs, const Derivation& d);

// The main branch of every term of the derivation (1-based term order).
std::vector<Branch> main_branches(const Trs& trs, const Derivation& d);

// Main progenies of p over the term range [from, to] (1-based, inclusive),
// restricted stepwise to the main branches.
std::set<Position> main_progeny(const DerivationAnalysis& a, int from, int to,
                                const Position& p);

// The unique main progenitor in t_i of a main-branch position q of t_{i+1}.
// Throws NotOnMainBranch if q is not on the main branch of t_{i+1}.
Position main_progenitor(const DerivationAnalysis& a, int i, const Position& q);

struct PgNode {
    int term_index;  // 1-based
    Position pos;
    bool operator==(const PgNode& o) const {
        return term_index == o.term_index && pos == o.pos;
    }
    bool operator<(const PgNode& o) const {
        if (term_index != o.term_index) return term_index < o.term_index;
        return pos < o.pos;
    }
};

struct ProgenitorGraph {
    std::vector<PgNode> nodes;                 // sorted by (term index, position)
    std::vector<std::pair<int, int>> edges;    // indices into nodes
    int node_index(const PgNode& n) const;     // -1 if absent
};

// The progenitor graph: nodes are main-branch positions with defined root
// whose main progenitor is the previous redex (all defined main-branch
// positions for the first term); edges follow unique main progenitor chains
// that meet no intermediate redex.
ProgenitorGraph progenitor_graph(const DerivationAnalysis& a);

std::string pg_to_dot(const ProgenitorGraph& g);
std::string pg_to_json(const ProgenitorGraph& g);

enum class ImplicitStepKind { Dp, R, Eq };

struct ImplicitDpDerivation {
    std::vector<Term> terms;  // marked
    std::vector<ImplicitStepKind> kinds;
    int dpsize = 0;
};

// The implicit dependency pair derivation along a progeny-linked chain of
// positions in consecutive terms t_first, t_first+1, ... Every constructed
// step is validated as a DP(R) instance, an R step, or an equality.
ImplicitDpDerivation implicit_dp_derivation(const Trs& trs, const Derivation& d, int first,
                                            const std::vector<Position>& chain);

}  // namespace dpclab
