// Acceptance suite: one criterion per section, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "dpclab/bounds.hpp"
#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"
#include "dpclab/simtrs.hpp"
#include "dpclab/suites.hpp"
#include "oracles.hpp"

using namespace dpclab;

namespace {

int failed = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    std::string detail;
    bool pass = true;
    try {
        body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    std::cout << "criterion " << number << " (" << title << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failed;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw Error(what);
}

Rule marked_pair(const std::string& lhs, const std::string& rhs) {
    std::set<std::string> vars{"x", "y", "z", "w"};
    return Rule{mark_root(parse_term(lhs, vars)), mark_root(parse_term(rhs, vars))};
}

std::set<std::pair<int, std::string>> node_set(const ProgenitorGraph& g) {
    std::set<std::pair<int, std::string>> out;
    for (const PgNode& n : g.nodes) out.insert({n.term_index, n.pos.str()});
    return out;
}

}  // namespace

int main() {
    const size_t budget = 2000000;

    criterion(1, "dependency pair counts and terms", [&] {
        require(dependency_pairs(builtin_example("Ra")).pairs.size() == 9, "Ra must have 9 pairs");
        DpProblem rde = dependency_pairs(builtin_example("Rde"));
        require(rde.pairs.size() == 2, "Rde must have 2 pairs");
        require(rde.pairs[0] == marked_pair("f(s(x))", "f(f(x))"), "Rde pair 1");
        require(rde.pairs[1] == marked_pair("f(s(x))", "f(x)"), "Rde pair 2");
        DpProblem rebin = dependency_pairs(builtin_example("Rebin"));
        require(rebin.pairs.size() == 3, "Rebin must have 3 pairs");
        require(rebin.pairs[0] == marked_pair("d(s(x))", "d(x)"), "Rebin pair 1");
        require(rebin.pairs[1] == marked_pair("e(s(x),y)", "e(x,d(y))"), "Rebin pair 2");
        require(rebin.pairs[2] == marked_pair("e(s(x),y)", "d(y)"), "Rebin pair 3");
    });

    criterion(2, "progenitor graphs reproduce the figures", [&] {
        {
            ProgenitorGraph g =
                progenitor_graph(analyze(builtin_example("Rb"), builtin_trace("fig1")));
            require(g.nodes.size() == 5 && g.edges.size() == 2, "first figure: 5 nodes, 2 edges");
            require(node_set(g) == std::set<std::pair<int, std::string>>{
                                       {1, ""}, {1, "1"}, {1, "1.1"}, {2, "1"}, {2, "1.1"}},
                    "first figure node set");
        }
        {
            ProgenitorGraph g =
                progenitor_graph(analyze(builtin_example("Rd"), builtin_trace("rdtree")));
            require(g.nodes.size() == 7 && g.edges.size() == 6, "binary-tree figure size");
            require(node_set(g) ==
                        std::set<std::pair<int, std::string>>{{1, ""},
                                                              {2, "1"},
                                                              {2, "1.1"},
                                                              {3, "1.1.1"},
                                                              {3, "1.1.1.1"},
                                                              {4, "1.1"},
                                                              {4, "1.1.1"}},
                    "binary-tree figure node set");
            // full binary tree: one root, every node at most two children,
            // every non-root exactly one parent
            std::map<int, int> indeg, outdeg;
            for (auto& [s, t] : g.edges) {
                outdeg[s]++;
                indeg[t]++;
            }
            int roots = 0;
            for (size_t i = 0; i < g.nodes.size(); ++i) {
                if (!indeg.count(static_cast<int>(i))) ++roots;
                require(indeg[static_cast<int>(i)] <= 1, "a node has two parents");
                require(outdeg[static_cast<int>(i)] == 0 || outdeg[static_cast<int>(i)] == 2,
                        "internal nodes have exactly two children");
            }
            require(roots == 1, "one tree root");
        }
        {
            ProgenitorGraph g =
                progenitor_graph(analyze(builtin_example("Re"), builtin_trace("rechain")));
            require(g.nodes.size() == 3 && g.edges.size() == 2, "chain figure size");
            require(node_set(g) == std::set<std::pair<int, std::string>>{
                                       {1, ""}, {2, "1.1"}, {3, "1.1.1.1"}},
                    "chain figure node set");
            require(g.edges[0] == std::make_pair(0, 1) && g.edges[1] == std::make_pair(1, 2),
                    "chain edges");
        }
    });

    criterion(3, "doubling lengths and linear pair complexity", [&] {
        Trs rde = builtin_example("Rde");
        for (int n = 1; n <= 3; ++n) {
            Derivation phase1 = builtin_trace("rde" + std::to_string(n));
            long long expected1 = (1LL << n) - 1;
            require(validate_derivation(rde, phase1), "phase-1 trace must replay");
            require(static_cast<long long>(phase1.length()) == expected1,
                    "phase-1 trace has 2^n-1 steps");
            // final term s^n(f^(2^n)(0))
            Term expect = parse_term("0");
            for (long long i = 0; i < (1LL << n); ++i) expect = make_fun("f", {expect});
            for (int i = 0; i < n; ++i) expect = make_fun("s", {expect});
            require(phase1.final_term() == expect, "phase-1 trace ends at s^n(f^(2^n)(0))");
            require(static_cast<int>(phase1.initial->size) == n + 2, "start size is n+2");

            // outermost duplication phase: 2^(2^n)-1 further steps
            Derivation phase2 =
                derive(rde, phase1.final_term(), Strategy::LeftmostOutermost, 1u << 20);
            long long expected2 = (1LL << (1LL << n)) - 1;
            require(static_cast<long long>(phase2.length()) == expected2,
                    "phase-2 has 2^(2^n)-1 steps");
            require(is_normal_form(rde, phase2.final_term()), "phase-2 ends in a normal form");
            // the two phases concatenate into one valid derivation, so the
            // empirical complexity at size n+2 is at least their joint length
            Derivation combined = phase1;
            combined.steps.insert(combined.steps.end(), phase2.steps.begin(), phase2.steps.end());
            require(validate_derivation(rde, combined), "combined derivation validates");
            long long bound = expected1 + expected2;
            if (n <= 2) {
                ComplexityTable dc =
                    empirical_complexity(rde, n + 2, ComplexityMode::Dc, budget);
                require(dc.rows.back().second >= bound,
                        "exhaustive empirical complexity reaches the bound");
            }
            require(static_cast<long long>(combined.length()) == bound,
                    "witnessed lower bound 2^n-1+2^(2^n)-1");
        }
        ComplexityTable dpk = empirical_complexity(rde, 6, ComplexityMode::DpComplexity, budget);
        for (auto& [size, value] : dpk.rows)
            require(value <= size, "pair complexity is at most linear");
    });

    criterion(4, "usable rules and the doubling interpretation", [&] {
        Trs rebin = builtin_example("Rebin");
        DpProblem dp = dependency_pairs(rebin);
        UsableRulesResult ur = usable_rules(dp);
        require(ur.usable == std::vector<int>{0, 1}, "exactly the two d rules are usable");
        require(rule_to_string(rebin.rules[0]) == "d(0) -> 0" &&
                    rule_to_string(rebin.rules[1]) == "d(s(x)) -> s(s(d(x)))",
                "the usable rules are the d rules");
        SuiteOptions opt;
        SuiteResult alg = algebra_suite(opt);
        bool found = false;
        for (const BoundReport& r : alg.reports)
            if (r.check == "algebra_rebin_sampled") {
                found = true;
                require(r.pass, "the sampled interpretation orients pairs strictly and "
                                "usable rules weakly");
            }
        require(found, "sampled interpretation report present");
    });

    criterion(5, "restricted interpretation and relative heights", [&] {
        Trs rde = builtin_example("Rde");
        DpProblem dp = dependency_pairs(rde);
        AlgebraProblem problem{dp.pairs, rde.rules};
        Interpretation alg;
        alg.fns.emplace("f#", Expr::arg(0));
        alg.fns.emplace("f", Expr::arg(0));
        alg.fns.emplace("s", Expr::arg(0) + Expr::constant(1));
        alg.fns.emplace("c", Expr::constant(0));
        alg.fns.emplace("0", Expr::constant(0));
        require(check_algebra(problem, alg, AlgebraMode::LinearExact).pass,
                "the restricted interpretation verifies in the exact mode");
        RelativeHeightEngine engine(dp.pairs_trs(), dp.base);
        for (int n = 0; n <= 5; ++n) {
            Term t = parse_term("0");
            for (int i = 0; i < n; ++i) t = make_fun("s", {t});
            t = mark_root(make_fun("f", {t}));
            require(engine.height(t, budget) <= n, "marked tower height is at most n");
        }
    });

    criterion(6, "graph, measure and encoding values", [&] {
        Trs rb = builtin_example("Rb");
        DpProblem dp = dependency_pairs(rb);
        DependencyGraph dg = estimated_dependency_graph(dp);
        require(dg.edges.empty(), "the two-pair graph has no edges");
        require(dg.sccs.size() == 2 && dg.sccs[0].trivial && dg.sccs[1].trivial,
                "two trivial SCCs");
        require(dg.sccs[0].rank == 1 && dg.sccs[1].rank == 2, "stated rank choice");
        SccHeightOracle oracle(rb, dp, dg, budget);
        require(oracle.sccheight(parse_term("c")) == SccHeight{0, 1}, "measure of c");
        require(oracle.sccheight(parse_term("g(c,c)")) == SccHeight{0, 1}, "measure of g(c,c)");
        require(oracle.sccheight(parse_term("f(f(c))")) == SccHeight{2, 1}, "measure of f(f(c))");
        require(oracle.sccheight(parse_term("f(c)")) == SccHeight{2, 1}, "measure of f(c)");
        require(oracle.sccheight(parse_term("f(g(c,c))")) == SccHeight{2, 1},
                "measure of f(g(c,c))");
        require(oracle.sccheight(parse_term("d")) == SccHeight{0, 0}, "measure of d");
        require(term_to_string(tr_encode(oracle, 2, parse_term("f(f(c))"))) ==
                    "g2(s(0),g2(s(0),g0(s(0),c,c),c),c)",
                "encoding of f(f(c))");
        require(term_to_string(tr_encode(oracle, 2, parse_term("f(g(c,c))"))) ==
                    "g2(s(0),g0(s(0),g0(s(0),c,c),g0(s(0),c,c)),c)",
                "encoding of f(g(c,c))");
        require(term_to_string(tr_encode(oracle, 2, parse_term("c"))) == "g0(s(0),c,c)",
                "encoding of c");
    });

    criterion(7, "simulation witnesses", [&] {
        SuiteOptions opt;
        opt.budget = budget;
        SuiteResult sims = sim_suite(opt);
        for (const BoundReport& r : sims.reports)
            require(r.pass, "simulation report failed: " + r.check);
        // all 302 ground terms of depth <= 2 were seeded
        bool seeds = false;
        for (const BoundReport& r : sims.reports)
            if (r.check == "sim_seeds_rb_depth2") {
                seeds = true;
                require(r.witness.at("terms") == "302", "seed count over depth <= 2");
            }
        require(seeds, "seed report present");
    });

    criterion(8, "progeny and depth-bound batteries, zero violations", [&] {
        SuiteOptions opt;
        opt.runs = 200;
        opt.seed = 1;
        opt.max_steps = 12;
        opt.max_start_size = 10;
        for (const char* name : {"Rb", "Rd", "Re", "Rde", "Rebin"}) {
            SuiteResult suite = progeny_suite(builtin_example(name), opt);
            require(static_cast<int>(suite.reports.size()) == opt.runs, "200 reports per system");
            for (const BoundReport& r : suite.reports)
                require(r.pass, std::string(name) + " " + r.check);
        }
    });

    criterion(9, "string rewriting bounds, zero violations", [&] {
        SuiteOptions opt;
        opt.runs = 200;
        opt.seed = 1;
        for (const char* name : {"Re", "Rd"}) {
            SuiteResult suite = srs_suite(builtin_example(name), opt);
            require(static_cast<int>(suite.reports.size()) == opt.runs, "200 reports per system");
            for (const BoundReport& r : suite.reports)
                require(r.pass, std::string(name) + " " + r.check);
        }
    });

    criterion(10, "the composition family dominates the textbook recursion", [&] {
        Trs r2 = builtin_example("Rl", 2);
        HeightEngine engine(r2);
        for (int n = 0; n <= 2; ++n) {
            long long ack = oracles::ackermann(0, n);
            require(ack == n + 1, "textbook base case");
            long long dh = engine.height(composition_start_term(0, n), budget);
            require(dh >= ack, "derivation height dominates the recursion value");
        }
    });

    criterion(11, "exact function-level checks", [&] {
        for (long long E : {6, 8}) {
            require(g_bound(E, 0, 0) == E && g_bound(E, 0, 2) == E, "g(0,n) = E");
            for (long long m = 0; m <= 6; ++m)
                require(g_bound(E, m, 0) ==
                            bignat_pow(BigNat(E), static_cast<unsigned long long>(m + 1)),
                        "g(m,0) = E^(m+1)");
            for (long long m = 0; m <= 4; ++m)
                for (long long n = 0; n <= 2; ++n)
                    require(check_g_closed_form(E, m, n).pass, "closed-form bound");
        }
        SuiteResult fast = fast_suite();
        for (const BoundReport& r : fast.reports) require(r.pass, "fast function properties");
        SuiteOptions opt;
        opt.budget = budget;
        SuiteResult ig = ig_suite(opt);
        int samples = 0;
        for (const BoundReport& r : ig.reports) {
            require(r.pass, "interpretation size bound: " + r.check);
            if (r.check.rfind("ig_bound", 0) == 0) ++samples;
        }
        require(samples == 50, "50 sampled size-bound instances");
    });

    if (failed) {
        std::cout << failed << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
