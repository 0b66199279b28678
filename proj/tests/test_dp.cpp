#include <doctest.h>

#include "dpclab/dp.hpp"
#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"

using namespace dpclab;

namespace {
Rule pair_of(const std::string& lhs, const std::string& rhs) {
    std::set<std::string> vars{"x", "y", "z", "w"};
    // marked symbols cannot be written in the input grammar, so build pairs
    // by marking parsed unmarked terms at the root
    return Rule{mark_root(parse_term(lhs, vars)), mark_root(parse_term(rhs, vars))};
}
}  // namespace

TEST_CASE("dependency pairs of the example systems") {
    CHECK(dependency_pairs(builtin_example("Ra")).pairs.size() == 9);

    DpProblem rde = dependency_pairs(builtin_example("Rde"));
    REQUIRE(rde.pairs.size() == 2);
    CHECK(rde.pairs[0] == pair_of("f(s(x))", "f(f(x))"));
    CHECK(rde.pairs[1] == pair_of("f(s(x))", "f(x)"));

    DpProblem rebin = dependency_pairs(builtin_example("Rebin"));
    REQUIRE(rebin.pairs.size() == 3);
    CHECK(rebin.pairs[0] == pair_of("d(s(x))", "d(x)"));
    CHECK(rebin.pairs[1] == pair_of("e(s(x),y)", "e(x,d(y))"));
    CHECK(rebin.pairs[2] == pair_of("e(s(x),y)", "d(y)"));

    // a rule with a constructor-rooted right-hand side contributes no pairs
    CHECK(dependency_pairs(parse_trs("(RULES c -> d)")).pairs.empty());

    // pair count equals an independent scan over defined-rooted rhs positions
    for (const char* name : {"Ra", "Rb", "Rd", "Re", "Rde", "Rebin", "Rack"}) {
        Trs trs = builtin_example(name);
        size_t count = 0;
        for (const Rule& r : trs.rules)
            for (const Position& p : positions(r.rhs)) {
                Term u = subterm_at(r.rhs, p);
                if (!is_var(u) && trs.is_defined(u->sym) && !has_proper_subterm(r.lhs, u))
                    ++count;
            }
        CHECK(dependency_pairs(trs).pairs.size() == count);
    }
}

TEST_CASE("argument filtering") {
    std::set<std::string> vars{"x", "y", "z"};
    ArgumentFiltering pi;
    pi.pi.emplace("f", 1);
    pi.pi.emplace("i", std::vector<int>{1});
    pi.pi.emplace("∘", std::vector<int>{1, 2});

    // the worked filtering on the motivating left-hand side shape
    Term t = parse_term("∘(f(x,i(x)),∘(i(i(y)),z))", vars);
    CHECK(apply_filtering(pi, t) == parse_term("∘(x,∘(i(i(y)),z))", vars));

    ArgumentFiltering collapse;
    collapse.pi.emplace("f", 1);
    CHECK(apply_filtering(collapse, parse_term("f(x)", vars)) == parse_term("x", vars));

    ArgumentFiltering drop;
    drop.pi.emplace("g", std::vector<int>{});
    drop.pi.emplace("a", std::vector<int>{});
    drop.pi.emplace("b", std::vector<int>{});
    CHECK(apply_filtering(drop, parse_term("g(a,b)")) == parse_term("g"));

    CHECK_THROWS_AS(apply_filtering(drop, parse_term("h(a)")), MissingFilterEntry);
}

TEST_CASE("estimated dependency graph and ranks") {
    // two isolated pairs, ranked in enumeration order
    DpProblem rb = dependency_pairs(builtin_example("Rb"));
    DependencyGraph dgb = estimated_dependency_graph(rb);
    CHECK(dgb.edges.empty());
    REQUIRE(dgb.sccs.size() == 2);
    CHECK(dgb.sccs[0].trivial);
    CHECK(dgb.sccs[1].trivial);
    CHECK(dgb.sccs[0].members == std::vector<int>{0});
    CHECK(dgb.sccs[0].rank == 1);
    CHECK(dgb.sccs[1].rank == 2);

    // the duplicating pair abstracts to a fresh variable, closing the cycle
    DpProblem rde = dependency_pairs(builtin_example("Rde"));
    DependencyGraph dgde = estimated_dependency_graph(rde);
    REQUIRE(dgde.sccs.size() == 1);
    CHECK(!dgde.sccs[0].trivial);
    CHECK(dgde.sccs[0].members == std::vector<int>{0, 1});
    CHECK(dgde.edges.size() == 4);

    // a self-loop makes a single-node SCC nontrivial
    DpProblem loop = dependency_pairs(parse_trs("(RULES a -> a)"));
    REQUIRE(loop.pairs.size() == 1);
    DependencyGraph dgl = estimated_dependency_graph(loop);
    REQUIRE(dgl.sccs.size() == 1);
    CHECK(!dgl.sccs[0].trivial);

    // rank respects reachability on a system with edges between SCCs
    DpProblem rebin = dependency_pairs(builtin_example("Rebin"));
    DependencyGraph dgr = estimated_dependency_graph(rebin);
    for (auto& [i, j] : dgr.edges) {
        int ci = dgr.scc_of[static_cast<size_t>(i)], cj = dgr.scc_of[static_cast<size_t>(j)];
        if (ci != cj)
            CHECK(dgr.sccs[static_cast<size_t>(ci)].rank > dgr.sccs[static_cast<size_t>(cj)].rank);
    }
    // ranks are a bijection onto 1..k
    std::set<int> ranks;
    for (const SccInfo& s : dgr.sccs) ranks.insert(s.rank);
    CHECK(ranks.size() == dgr.sccs.size());
    CHECK(*ranks.begin() == 1);
    CHECK(*ranks.rbegin() == static_cast<int>(dgr.sccs.size()));
}

TEST_CASE("estimation over-approximates witnessed chains") {
    // for any two pairs connected by a concrete chain witness found by
    // bounded search, the estimated graph has the edge
    for (const char* name : {"Rb", "Rde", "Rebin", "Rd"}) {
        Trs trs = builtin_example(name);
        DpProblem dp = dependency_pairs(trs);
        DependencyGraph dg = estimated_dependency_graph(dp);
        std::set<std::pair<int, int>> edges(dg.edges.begin(), dg.edges.end());
        std::vector<Term> ground = enumerate_ground_terms(trs.signature, 4);
        for (size_t i = 0; i < dp.pairs.size(); ++i) {
            const Rule& from = dp.pairs[i];
            std::set<Sym> vars = variables_of(from.rhs);
            std::vector<Sym> vlist(vars.begin(), vars.end());
            std::vector<size_t> idx(vlist.size(), 0);
            while (true) {
                Substitution sigma;
                for (size_t v = 0; v < vlist.size(); ++v) sigma[vlist[v]] = ground[idx[v]];
                // bounded reachability from the instantiated rhs
                std::set<Term> seen{apply_subst(from.rhs, sigma)};
                std::vector<Term> work(seen.begin(), seen.end());
                while (!work.empty() && seen.size() < 3000) {
                    Term t = work.back();
                    work.pop_back();
                    for (size_t j = 0; j < dp.pairs.size(); ++j)
                        if (match(dp.pairs[j].lhs, t))
                            CHECK(edges.count({static_cast<int>(i), static_cast<int>(j)}));
                    for (const RewriteStep& s : one_step_reducts(trs, t))
                        if (seen.insert(s.target).second) work.push_back(s.target);
                }
                size_t v = 0;
                for (; v < vlist.size(); ++v) {
                    if (++idx[v] < std::min<size_t>(ground.size(), 6)) break;
                    idx[v] = 0;
                }
                if (v == vlist.size() || vlist.empty()) break;
            }
        }
    }
}

TEST_CASE("usable rules") {
    Trs rebin = builtin_example("Rebin");
    DpProblem dp = dependency_pairs(rebin);
    UsableRulesResult ur = usable_rules(dp);
    // exactly the two d rules
    REQUIRE(ur.usable.size() == 2);
    CHECK(root(rebin.rules[static_cast<size_t>(ur.usable[0])].lhs) == intern_symbol("d"));
    CHECK(root(rebin.rules[static_cast<size_t>(ur.usable[1])].lhs) == intern_symbol("d"));
    CHECK(rule_to_string(ur.ce_first) == "c_e#cons(x,y) -> x");
    CHECK(rule_to_string(ur.ce_second) == "c_e#cons(x,y) -> y");
    CHECK(usable_rules_exact_check(dp, ur, 3));

    // f occurs in the pair right-hand sides, so everything stays usable
    DpProblem rde = dependency_pairs(builtin_example("Rde"));
    CHECK(usable_rules(rde).usable.size() == 2);

    // variable-only pair arguments leave nothing usable
    DpProblem none = dependency_pairs(parse_trs("(VAR x) (RULES f(s(x)) -> f(x) a -> b)"));
    CHECK(usable_rules(none).usable.empty());
}

TEST_CASE("empirical complexity tables") {
    Trs rde = builtin_example("Rde");
    ComplexityTable dc = empirical_complexity(rde, 4, ComplexityMode::Dc, 500000);
    REQUIRE(dc.rows.size() == 4);
    CHECK(dc.rows[3] == std::pair<int, long long>{4, 18});

    CHECK(empirical_complexity(rde, 0, ComplexityMode::Dc).rows.empty());

    ComplexityTable dpk = empirical_complexity(rde, 6, ComplexityMode::DpComplexity, 500000);
    for (auto& [size, value] : dpk.rows) CHECK(value <= size);

    ComplexityTable scc = empirical_complexity(rde, 4, ComplexityMode::SccComplexity, 500000);
    for (auto& [size, value] : scc.rows) CHECK(value >= 1);
}

TEST_CASE("graph exports") {
    DpProblem dp = dependency_pairs(builtin_example("Rb"));
    DependencyGraph dg = estimated_dependency_graph(dp);
    std::string dot = dg_to_dot(dp, dg);
    CHECK(dot.find("digraph") != std::string::npos);
    std::string json = dg_to_json(dg);
    CHECK(json.find("\"sccs\"") != std::string::npos);
}
