#pragma once

#include <memory>

#include "dpclab/bignat.hpp"
#include "dpclab/dp.hpp"
#include "dpclab/rewrite.hpp"

namespace dpclab {

// Lexicographic measure (rank of a term, remaining SCC-relative height).
struct SccHeight {
    long long rank = 0;
    long long height = 0;

    bool operator==(const SccHeight& o) const { return rank == o.rank && height == o.height; }
    bool operator!=(const SccHeight& o) const { return !(*this == o); }
    bool operator<(const SccHeight& o) const {
        return rank != o.rank ? rank < o.rank : height < o.height;
    }
    bool operator<=(const SccHeight& o) const { return *this < o || *this == o; }
    std::string str() const {
        return "(" + std::to_string(rank) + "," + std::to_string(height) + ")";
    }
};

// Shared rank/height machinery with caching: rank(t) is the maximal rank of
// an SCC whose pairs are applicable somewhere in the R-reachability set of
// t♯; the height is the relative height in that SCC.
class SccHeightOracle {
  public:
    SccHeightOracle(const Trs& base, const DpProblem& dp, const DependencyGraph& dg,
                    size_t budget = kDefaultBudget);
    ~SccHeightOracle();

    SccHeight sccheight(Term t);
    const DpProblem& dp() const;
    const DependencyGraph& dg() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SccHeight sccheight(const Trs& trs, const DpProblem& dp, const DependencyGraph& dg, Term t,
                    size_t budget = kDefaultBudget);

// tr(t) = g_i(s^l(0), tr(t_1), ..., tr(t_n), c, ..., c) for sccheight (i,l),
// padded with the constant to a+1 arguments.
Term tr_encode(SccHeightOracle& oracle, int max_arity, Term t);
Term tr_encode(const Trs& trs, const DpProblem& dp, const DependencyGraph& dg, Term t,
               size_t budget = kDefaultBudget);

struct SimParams {
    int max_arity = 1;        // a
    int branching = 2;        // C
    int scc_count = 1;        // k
    Trs f_rules;              // computes f on numerals over s/0
    std::string f_symbol = "f";
};

// Deterministic name tables and rule indices of the generated system.
struct SimSystem {
    SimParams params;
    Trs rules;  // schema rules followed by the f rules

    std::vector<std::string> g_names;  // g0..gk
    std::string size_name, dup_name, c_name, g_name, z_name;

    int rule1(int i) const;          // g_i(s(x), xs) -> M^C_i(x, xs)
    int rule2(int i) const;          // g_i(x, xs) -> g_{i-1}(f(size(g_0(0, xs))), xs)
    int rule3(int i, int j) const;   // size(g_i(x, xs)) -> d_a(size(x_j))
    int rule4() const;               // size(c) -> s(0)
    int rule5() const;               // d_a(s(x)) -> s^a(d_a(x))
    int rule6() const;               // d_a(0) -> 0
    int rule7() const;               // g_0(x, xs) -> c
    int rule8(int i, int j) const;   // g_i(x, xs) -> x_j
    int rule9() const;               // g(x) -> g_k(f(size(g_0(0, x..x))), x..x)
    int rule10() const;              // z -> the same with c's
    std::vector<int> f_rule_indices() const;

    // index i of a g_i head, -1 for other symbols
    int g_index(Sym s) const;
};

SimSystem generate_sim_system(const SimParams& params);
Trs generate_sim_trs(const SimParams& params);

// f-rule generators over unary numerals: f(n) = c0, and f(n) = c1*n + c0.
Trs make_f_rules_const(int c0, const std::string& f_symbol = "f");
Trs make_f_rules_affine(int c1, int c0, const std::string& f_symbol = "f");

// Constructive simulation: every produced derivation is validated step by
// step against the generated rules.
class Simulator {
  public:
    Simulator(const Trs& base, SimParams params, size_t budget = kDefaultBudget);
    ~Simulator();

    const SimSystem& system() const;
    const DpProblem& dp() const;
    const DependencyGraph& dg() const;

    SccHeight sccheight(Term t);
    Term tr(Term t);

    // witness tr(s) ->+ tr(t) for a single ground step s -> t
    Derivation simulate_step(const RewriteStep& step);
    // one witness per input step
    std::vector<Derivation> simulate_derivation(const Derivation& d);
    // witness g^depth(t)(z) ->* tr(t)
    Derivation seed_term_derivation(Term t);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// F_0(m) = d^(m+1), F_{n+1}(m) = F_n^(m+1)(m); exact values guarded by an
// evaluability cap (ArgumentTooLarge beyond it).
BigNat fast_function(int dparam, int n, const BigNat& m);

}  // namespace dpclab
