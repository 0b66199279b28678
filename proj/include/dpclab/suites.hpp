#pragma once

#include <cstdint>

#include "dpclab/bounds.hpp"
#include "dpclab/simtrs.hpp"

namespace dpclab {

struct SuiteOptions {
    int runs = 200;
    uint64_t seed = 1;
    int max_steps = 12;
    int max_start_size = 10;
    size_t budget = kDefaultBudget;
    int grid = 6;
};

struct SuiteResult {
    std::vector<BoundReport> reports;
    bool all_pass = true;

    void add(BoundReport r) {
        all_pass = all_pass && r.pass;
        reports.push_back(std::move(r));
    }
    void merge(const SuiteResult& o) {
        all_pass = all_pass && o.all_pass;
        reports.insert(reports.end(), o.reports.begin(), o.reports.end());
    }
};

// Per random derivation: progenitor/progeny nonemptiness, descendant
// agreement, prefix lifting, main progenitor uniqueness, constructor
// branching, edge derivations, hidden-step singletons, coverage, branching
// bounds, measure monotonicity along progenies, and the depth bound.
SuiteResult progeny_suite(const Trs& trs, const SuiteOptions& opt);

// Node-count and length bounds for string rewriting derivations.
SuiteResult srs_suite(const Trs& trs, const SuiteOptions& opt);

// One filtering commutation report per random step.
SuiteResult filtering_suite(const Trs& trs, const ArgumentFiltering& af, const SuiteOptions& opt);

// Reduct-listing interpretation: homomorphism outside G and the size bound
// against g (samples restricted to heights where g is evaluable).
SuiteResult ig_suite(const SuiteOptions& opt);

// g identities, monotonicity, and the closed-form bound.
SuiteResult g_suite();

// Growth and domination properties of the fast function family on the
// evaluable part of the grid.
SuiteResult fast_suite();

// The two bundled interpretations and the iterated-bound comparison.
SuiteResult algebra_suite(const SuiteOptions& opt);

// The worked simulation derivation, per-step witnesses for the bundled
// traces, and seed derivations for all shallow ground terms.
SuiteResult sim_suite(const SuiteOptions& opt);

// Everything above with default systems; used by `check all`.
SuiteResult all_suites(const SuiteOptions& opt);

// A filtering in the spirit of the worked example, totalized per system:
// collapses f-like unary symbols, keeps lists elsewhere.
ArgumentFiltering default_test_filtering(const Trs& trs);

}  // namespace dpclab
