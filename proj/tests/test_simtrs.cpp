#include <doctest.h>

#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"
#include "dpclab/simtrs.hpp"

using namespace dpclab;

namespace {
struct RbFixture {
    Trs rb = builtin_example("Rb");
    DpProblem dp = dependency_pairs(rb);
    DependencyGraph dg = estimated_dependency_graph(dp);
};
}  // namespace

TEST_CASE("sccheight values of the two-pair system") {
    RbFixture fx;
    SccHeightOracle oracle(fx.rb, fx.dp, fx.dg);
    CHECK(oracle.sccheight(parse_term("c")) == SccHeight{0, 1});
    CHECK(oracle.sccheight(parse_term("g(c,c)")) == SccHeight{0, 1});
    CHECK(oracle.sccheight(parse_term("f(f(c))")) == SccHeight{2, 1});
    CHECK(oracle.sccheight(parse_term("f(c)")) == SccHeight{2, 1});
    CHECK(oracle.sccheight(parse_term("f(g(c,c))")) == SccHeight{2, 1});
    CHECK(oracle.sccheight(parse_term("d")) == SccHeight{0, 0});
    // lexicographic comparison, and rank > 0 forces height > 0
    CHECK(SccHeight{0, 1} < SccHeight{2, 1});
    CHECK(SccHeight{2, 0} < SccHeight{2, 1});
}

TEST_CASE("tr encoding of the worked values") {
    RbFixture fx;
    CHECK(term_to_string(tr_encode(fx.rb, fx.dp, fx.dg, parse_term("f(f(c))"))) ==
          "g2(s(0),g2(s(0),g0(s(0),c,c),c),c)");
    CHECK(term_to_string(tr_encode(fx.rb, fx.dp, fx.dg, parse_term("f(g(c,c))"))) ==
          "g2(s(0),g0(s(0),g0(s(0),c,c),g0(s(0),c,c)),c)");
    CHECK(term_to_string(tr_encode(fx.rb, fx.dp, fx.dg, parse_term("c"))) == "g0(s(0),c,c)");
    CHECK_THROWS_AS(tr_encode(fx.rb, fx.dp, fx.dg, make_var("x")), BadParams);
}

TEST_CASE("generated system shape") {
    SimParams params;
    params.max_arity = 2;
    params.branching = 1;  // too small
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    CHECK_THROWS_AS(generate_sim_trs(params), BadParams);

    params.branching = 2;
    SimSystem sys = generate_sim_system(params);
    // (k+1) + k + (k+1)a + 4 + (k+1)a + 2 schema rules plus the f rules
    CHECK(sys.rules.rules.size() == 23 + params.f_rules.rules.size());
    CHECK(sys.rules.rules.size() == static_cast<size_t>(sys.rule10()) + 1 +
                                        params.f_rules.rules.size());
    // the duplication rule expands to the nested shape
    CHECK(rule_to_string(sys.rules.rules[static_cast<size_t>(sys.rule1(1))]) ==
          "g1(s(x),x1,x2) -> g1(x,g1(x,g1(x,x1,x2),g1(x,x1,x2)),g1(x,g1(x,x1,x2),g1(x,x1,x2)))");
    CHECK(rule_to_string(sys.rules.rules[static_cast<size_t>(sys.rule2(2))]) ==
          "g2(x,x1,x2) -> g1(f(size(g0(0,x1,x2))),x1,x2)");
    CHECK(rule_to_string(sys.rules.rules[static_cast<size_t>(sys.rule7())]) ==
          "g0(x,x1,x2) -> c");
    CHECK(rule_to_string(sys.rules.rules[static_cast<size_t>(sys.rule9())]) ==
          "g(x) -> g2(f(size(g0(0,x,x))),x,x)");
    // generated systems round-trip through the text format
    Trs reparsed = parse_trs(print_trs(sys.rules));
    REQUIRE(reparsed.rules.size() == sys.rules.rules.size());
    for (size_t i = 0; i < reparsed.rules.size(); ++i)
        CHECK(reparsed.rules[i] == sys.rules.rules[i]);

    // reserved symbol collision in the f rules
    SimParams bad = params;
    bad.f_rules = make_trs({Rule{make_fun("f", {make_var("x")}),
                                 make_fun("size", {make_fun("0")})}});
    CHECK_THROWS_AS(generate_sim_trs(bad), BadParams);

    // the nested duplication body has depth C+1
    for (int i = 0; i <= params.scc_count; ++i) {
        const Rule& r = sys.rules.rules[static_cast<size_t>(sys.rule1(i))];
        CHECK(r.rhs->depth == static_cast<uint32_t>(params.branching) + 1);
    }
}

TEST_CASE("derivative rules compute the parameter function") {
    Trs f1 = make_f_rules_const(1);
    Trs faff = make_f_rules_affine(1, 1);
    Trs merged = faff;
    Term five = parse_term("f(s(s(s(s(s(0))))))");
    Derivation d = derive(merged, five, Strategy::LeftmostInnermost, 100);
    CHECK(term_to_string(d.final_term()) == "s(s(s(s(s(s(0))))))");
    Derivation dc = derive(f1, five, Strategy::LeftmostInnermost, 100);
    CHECK(term_to_string(dc.final_term()) == "s(0)");
}

TEST_CASE("simulated steps validate and land on encodings") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Simulator sim(fx.rb, params);

    Derivation fig1 = builtin_trace("fig1");
    std::vector<Derivation> ws = sim.simulate_derivation(fig1);
    REQUIRE(ws.size() == 3);
    for (size_t i = 0; i < ws.size(); ++i) {
        CHECK(ws[i].length() >= 1);
        CHECK(validate_derivation(sim.system().rules, ws[i]));
        CHECK(ws[i].initial == sim.tr(fig1.steps[i].source));
        CHECK(ws[i].final_term() == sim.tr(fig1.steps[i].target));
    }

    // normal-form source has nothing to simulate: no step exists
    CHECK(one_step_reducts(fx.rb, parse_term("d")).empty());
}

TEST_CASE("seed derivations reach the encodings") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Simulator sim(fx.rb, params);

    for (const char* text : {"c", "d", "f(c)", "g(c,d)", "f(f(c))", "h(g(c,c),d)"}) {
        Term t = parse_term(text);
        Derivation seed = sim.seed_term_derivation(t);
        CHECK(validate_derivation(sim.system().rules, seed));
        CHECK(seed.final_term() == sim.tr(t));
        // the start term is the iterated unary seed applied to the constant
        Term expected = make_fun("z");
        for (uint32_t i = 0; i < t->depth; ++i) expected = make_fun("g", {expected});
        CHECK(seed.initial == expected);
    }
}

TEST_CASE("mismatched parameters are rejected") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 1;  // the system has two SCCs
    params.f_rules = make_f_rules_const(1);
    CHECK_THROWS_AS(Simulator(fx.rb, params), BadParams);
}

TEST_CASE("fast function family") {
    CHECK(fast_function(2, 0, 1) == 4);
    // F_1(1) = F_0(F_0(1)) = 2^(4+1) = 32
    CHECK(fast_function(2, 1, 1) == 32);
    // F_n(0) = d for every level
    CHECK(fast_function(2, 0, 0) == 2);
    CHECK(fast_function(2, 1, 0) == 2);
    CHECK(fast_function(2, 2, 0) == 2);
    CHECK(fast_function(3, 2, 0) == 3);
    CHECK(fast_function(2, 1, 2) == bignat_pow(2, 513));
    CHECK_THROWS_AS(fast_function(2, 2, 1), ArgumentTooLarge);
    CHECK_THROWS_AS(fast_function(2, 0, 7), ArgumentTooLarge);
    CHECK_THROWS_AS(fast_function(1, 0, 0), BadParams);
}

namespace {

// the equivalence that ignores counters and duplication indices
bool approx_equal(Term a, Term b) {
    if (a == b) return true;
    if (is_var(a) || is_var(b)) return false;
    std::string na = symbol_name(a->sym), nb = symbol_name(b->sym);
    bool ga = na.size() > 1 && na[0] == 'g' && isdigit(static_cast<unsigned char>(na[1]));
    bool gb = nb.size() > 1 && nb[0] == 'g' && isdigit(static_cast<unsigned char>(nb[1]));
    if (!ga || !gb) return false;
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 1; i < a->args.size(); ++i)
        if (!approx_equal(a->args[i], b->args[i])) return false;
    return true;  // first arguments are counters and stay unconstrained
}

std::optional<long long> numeral_value(Term t) {
    long long n = 0;
    while (!is_var(t) && symbol_name(t->sym) == "s" && t->args.size() == 1) {
        ++n;
        t = t->args[0];
    }
    if (is_var(t) || symbol_name(t->sym) != "0" || !t->args.empty()) return std::nullopt;
    return n;
}

}  // namespace

TEST_CASE("counter and collapse reachability in the generated system") {
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Trs sim = generate_sim_trs(params);
    // g_i(s(x), xs) ->+ g_i(x, xs) and g_i(x, xs) ->+ c, on concrete instances
    for (int i = 0; i <= 2; ++i) {
        std::string gi = "g" + std::to_string(i);
        Term from = parse_term(gi + "(s(0),c,c)");
        Term down = parse_term(gi + "(0,c,c)");
        Term cc = parse_term("c");
        std::set<Term> seen{from};
        std::vector<Term> queue{from};
        bool found_down = false, found_c = false;
        for (size_t head = 0; head < queue.size() && seen.size() < 20000; ++head) {
            Term t = queue[head];
            if (t == down) found_down = true;
            if (t == cc) found_c = true;
            if (found_down && found_c) break;
            for (const RewriteStep& s : one_step_reducts(sim, t))
                if (seen.insert(s.target).second) queue.push_back(s.target);
        }
        CHECK(found_down);
        CHECK(found_c);
    }
}

TEST_CASE("size images evaluate to large enough numerals") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Simulator sim(fx.rb, params);
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 30) {
        Term t = random_ground_term(fx.rb.signature, 5, rng);
        if (!is_ground(t)) continue;
        ++tested;
        Term probe = make_fun("size", {sim.tr(t)});
        std::set<Term> seen{probe};
        std::vector<Term> work{probe};
        bool found = false;
        while (!work.empty() && seen.size() < 60000 && !found) {
            Term u = work.back();
            work.pop_back();
            if (auto v = numeral_value(u); v && *v >= static_cast<long long>(t->size))
                found = true;
            for (const RewriteStep& s : one_step_reducts(sim.system().rules, u))
                if (seen.insert(s.target).second) work.push_back(s.target);
        }
        CHECK_MESSAGE(found, term_to_string(t));
    }
}

TEST_CASE("the encoding equivalence relates equal shapes") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Simulator sim(fx.rb, params);
    CHECK(approx_equal(sim.tr(parse_term("f(c)")), sim.tr(parse_term("f(d)"))));
    CHECK(approx_equal(sim.tr(parse_term("g(c,d)")), sim.tr(parse_term("g(d,c)"))));
    CHECK(!approx_equal(sim.tr(parse_term("f(c)")), sim.tr(parse_term("c"))));
    // reflexive, symmetric on a few instances
    for (const char* s : {"c", "f(c)", "g(c,c)"}) {
        Term t = sim.tr(parse_term(s));
        CHECK(approx_equal(t, t));
    }
}

TEST_CASE("seeding plus stepwise witnesses covers maximal derivations") {
    RbFixture fx;
    SimParams params;
    params.max_arity = 2;
    params.branching = 2;
    params.scc_count = 2;
    params.f_rules = make_f_rules_const(1);
    Simulator sim(fx.rb, params);
    HeightEngine heights(fx.rb);

    for (const char* text : {"f(c)", "f(f(c))", "g(f(c),c)"}) {
        Term t = parse_term(text);
        long long dh = heights.height(t);
        // greedy maximal derivation: always step to a successor of maximal height
        Derivation longest{t, {}};
        Term cur = t;
        while (true) {
            std::vector<RewriteStep> steps = one_step_reducts(fx.rb, cur);
            if (steps.empty()) break;
            const RewriteStep* best = &steps[0];
            for (const RewriteStep& s : steps)
                if (heights.height(s.target) > heights.height(best->target)) best = &s;
            longest.steps.push_back(*best);
            cur = best->target;
        }
        REQUIRE(static_cast<long long>(longest.length()) == dh);

        // the concatenation is one validated derivation from the seed start
        Derivation chain = sim.seed_term_derivation(t);
        for (const RewriteStep& step : longest.steps) {
            Derivation w = sim.simulate_step(step);
            REQUIRE(chain.final_term() == w.initial);
            chain.steps.insert(chain.steps.end(), w.steps.begin(), w.steps.end());
        }
        CHECK(validate_derivation(sim.system().rules, chain));
        CHECK(static_cast<long long>(chain.length()) >= dh);
        CHECK(chain.final_term() == sim.tr(longest.final_term()));
    }
}
