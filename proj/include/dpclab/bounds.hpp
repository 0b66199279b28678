#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dpclab/algebra.hpp"
#include "dpclab/bignat.hpp"
#include "dpclab/dp.hpp"
#include "dpclab/progeny.hpp"

namespace dpclab {

struct Inequality {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds;
};

// Structured pass/fail evidence for one bound or law check.
struct BoundReport {
    std::string check;
    bool pass = true;
    std::vector<Inequality> inequalities;
    std::map<std::string, std::string> witness;

    void require(const std::string& name, const BigNat& lhs, const std::string& rel,
                 const BigNat& rhs);
    void require(const std::string& name, const std::string& lhs, const std::string& rhs,
                 bool holds);
    void note(const std::string& key, const std::string& value) { witness[key] = value; }
    void fail(const std::string& why);
};

std::string report_to_json(const BoundReport& r);
std::string report_csv_header();
std::string report_to_csv(const BoundReport& r);

// depth(t_n) <= |t_1| * C^(m+2), with m the maximal relative height of a
// marked subterm of the start term. The shared engine parameter lets suites
// reuse height caches.
BoundReport check_depth_bound(const Trs& trs, const Derivation& d, size_t budget = kDefaultBudget,
                              RelativeHeightEngine* shared_engine = nullptr);

// For string rewriting: the progenitor graph has at least as many nodes as
// the derivation has steps, and steps <= |t_1| * C^(m+1).
BoundReport check_srs_bounds(const Trs& trs, const Derivation& d, size_t budget = kDefaultBudget,
                             RelativeHeightEngine* shared_engine = nullptr);

struct IgResult {
    Term image;
    long long size;
};

// The reduct-listing interpretation: symbols in G (defined symbols of the
// non-usable part) carry an explicit, totally ordered list of the images of
// all one-step reducts. Total order: size, then rendered-string lexicographic.
IgResult ig_transform(const Trs& trs, Term t, size_t budget = kDefaultBudget);
IgResult ig_transform(const Trs& trs, const std::set<std::string>& g_symbols, Term t,
                      size_t budget = kDefaultBudget);

// g(m,n) recurrence: g(0,n) = E; g(m,0) = E*g(m-1,0);
// g(m,n) = E*g(m-1,n) + E*m*g(E*m, n-1). Guarded at the entry point.
BigNat g_bound(long long E, long long m, long long n);

// E = max{2, a, b, c} + 3 with a the maximum arity, b the rule count and
// c = 1 + max(per-variable rhs occurrence count, rhs size) over all rules.
long long ig_size_constant(const Trs& trs);

// g(m,n) <= (E(n+1))^((n+1)*E^(2m+1)), verified without materializing the
// right-hand side when it is astronomically large.
BoundReport check_g_closed_form(long long E, long long m, long long n);

// h(m,n) = 2^(2^(m*2^(F*(n+1)))) and H[f](m) = f(1 + F*G(m, h(m,m))) with
// G(m,n) = 2^(2^(d*(m+n+1))); exact big integers, guarded by a bit cap.
// The towers explode almost immediately, so these are exercised at tiny
// arguments only.
BigNat h_tower(long long m, long long n, long long F, size_t bit_cap = 1u << 22);
BigNat big_g_tower(long long m, const BigNat& n, long long d, size_t bit_cap = 1u << 22);
BigNat iterate_bound(const std::function<BigNat(const BigNat&)>& f, long long m, long long F,
                     long long d, size_t bit_cap = 1u << 22);

struct AlgebraProblem {
    std::vector<Rule> strict;
    std::vector<Rule> weak;
};

enum class AlgebraMode { LinearExact, Sampled };

// Orientation check for a user-supplied interpretation: strict rules must
// decrease, weak rules must not increase. LinearExact decides affine
// interpretations by coefficient comparison; Sampled evaluates all
// assignments over {0..grid}^vars and is refutation-sound only.
BoundReport check_algebra(const AlgebraProblem& problem, const Interpretation& alg,
                          AlgebraMode mode, int grid = 6);

// Dc_R(m) <= p^m(0) for m <= n, for an algebra compatible with R (all rules
// strictly decreasing) and p dominating every f_A(n,...,n).
BoundReport check_dc_bound_from_algebra(const Trs& trs, const Interpretation& alg, const Expr& p,
                                        int n, size_t budget = kDefaultBudget, int grid = 6);

}  // namespace dpclab
