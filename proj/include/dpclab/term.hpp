#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dpclab/errors.hpp"

namespace dpclab {

// Interned function/variable names. A Sym is stable for the process lifetime.
using Sym = uint32_t;

Sym intern_symbol(std::string_view name);
const std::string& symbol_name(Sym s);

// First-order terms. Nodes are hash-consed in a global arena, so Term values
// are plain pointers, structural equality is pointer equality, and size,
// depth and hash are O(1).
struct TermNode {
    Sym sym;
    bool var;
    uint32_t size;   // number of symbol and variable occurrences
    uint32_t depth;  // 0 for variables and constants
    uint64_t hash;
    std::vector<const TermNode*> args;
};

using Term = const TermNode*;

Term make_var(std::string_view name);
Term make_var(Sym s);
Term make_fun(std::string_view name, std::vector<Term> args = {});
Term make_fun(Sym s, std::vector<Term> args = {});

inline Sym root(Term t) { return t->sym; }
inline bool is_var(Term t) { return t->var; }

std::string term_to_string(Term t);

// Positions are dot-paths of 1-based argument indices; the empty path is the
// root. Serialized as integers joined by '.', root as the empty string.
struct Position {
    std::vector<uint32_t> ix;

    Position() = default;
    explicit Position(std::vector<uint32_t> v) : ix(std::move(v)) {}

    bool is_root() const { return ix.empty(); }
    size_t length() const { return ix.size(); }

    Position child(uint32_t i) const {
        Position p = *this;
        p.ix.push_back(i);
        return p;
    }
    // concatenation p·q
    Position concat(const Position& q) const {
        Position p = *this;
        p.ix.insert(p.ix.end(), q.ix.begin(), q.ix.end());
        return p;
    }

    bool operator==(const Position& o) const { return ix == o.ix; }
    bool operator!=(const Position& o) const { return ix != o.ix; }
    // lexicographic order on index sequences (prefix sorts first)
    bool operator<(const Position& o) const { return ix < o.ix; }

    std::string str() const;
    static Position parse(std::string_view s);
};

// p <= q : p is a prefix of q
bool is_prefix(const Position& p, const Position& q);
bool is_strict_prefix(const Position& p, const Position& q);
bool is_parallel(const Position& p, const Position& q);
// q = p·r  ->  r
Position strip_prefix(const Position& p, const Position& q);

// All positions of t in pre-order, which coincides with lexicographic order.
std::vector<Position> positions(Term t);
std::vector<Position> fun_positions(Term t);
std::vector<Position> var_positions(Term t);

Term subterm_at(Term t, const Position& p);  // throws PositionOutOfRange
Term replace_at(Term t, const Position& p, Term u);
bool valid_position(Term t, const Position& p);

// Substitutions map variables to terms; application is homomorphic.
using Substitution = std::map<Sym, Term>;

Term apply_subst(Term t, const Substitution& sigma);
// unique sigma with pattern·sigma = subject, if it exists
std::optional<Substitution> match(Term pattern, Term subject);

bool is_ground(Term t);
std::set<Sym> variables_of(Term t);
void collect_function_symbols(Term t, std::map<std::string, int>& sig);

// true iff some proper subterm of t equals u
bool has_proper_subterm(Term t, Term u);
// true iff some subterm of t equals u
bool has_subterm(Term t, Term u);

// A branch is the position chain of a root-to-leaf path. Branches are
// enumerated left to right (by leaf position).
using Branch = std::vector<Position>;
std::vector<Branch> branches_of(Term t);

struct TermMetrics {
    uint32_t size;
    uint32_t depth;
    std::vector<Branch> branches;
};

TermMetrics term_metrics(Term t);

// All ground terms of size <= max_size over the signature, smallest first,
// deterministic order. If the signature has no constant a fresh constant
// "⋄" is added so that the enumeration is nonempty.
std::vector<Term> enumerate_ground_terms(const std::map<std::string, int>& signature,
                                         int max_size);

}  // namespace dpclab
