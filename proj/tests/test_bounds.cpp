#include <doctest.h>

#include "dpclab/bounds.hpp"
#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"
#include "dpclab/suites.hpp"

using namespace dpclab;

TEST_CASE("depth bound on the worked derivations") {
    Trs rd = builtin_example("Rd");
    BoundReport r = check_depth_bound(rd, builtin_trace("rdtree"));
    CHECK(r.pass);
    CHECK(r.witness.at("m") == "2");
    CHECK(r.witness.at("C") == "3");
    // depth 6 <= 4*3^4 = 324
    CHECK(r.inequalities[0].lhs == "6");
    CHECK(r.inequalities[0].rhs == "324");

    // a normal-form start satisfies the m=0 case
    Trs rde = builtin_example("Rde");
    BoundReport nf = check_depth_bound(rde, Derivation{parse_term("s(s(0))"), {}});
    CHECK(nf.pass);
    CHECK(nf.witness.at("m") == "0");
}

TEST_CASE("srs bounds on the worked derivation") {
    Trs re = builtin_example("Re");
    BoundReport r = check_srs_bounds(re, builtin_trace("rechain"));
    CHECK(r.pass);
    // 3 nodes >= 2 steps; 2 <= 4*3^(m+1) with m=2
    CHECK(r.inequalities[0].lhs == "3");
    CHECK(r.inequalities[0].rhs == "2");
    CHECK(r.witness.at("m") == "2");

    BoundReport empty = check_srs_bounds(re, Derivation{parse_term("d(0)"), {}});
    CHECK(empty.pass);

    CHECK_THROWS_AS(check_srs_bounds(builtin_example("Rde"), builtin_trace("rde1")), NotAnSrs);
}

TEST_CASE("reduct-listing interpretation") {
    Trs rebin = builtin_example("Rebin");
    CHECK(ig_size_constant(rebin) == 8);

    // no symbol of G occurs: homomorphic
    IgResult plain = ig_transform(rebin, parse_term("d(0)"));
    CHECK(plain.image == parse_term("d(0)"));

    IgResult e00 = ig_transform(rebin, parse_term("e(0,0)"));
    CHECK(e00.size == 7);
    CHECK(term_to_string(e00.image) == "cons(e(0,0),cons(0,nil))");
    CHECK(BigNat(e00.size) <= g_bound(8, 3, 1));

    // a cycle below the transformed term is detected
    Trs cyc = parse_trs("(RULES e(a,a) -> e(a,a) a -> b)");
    CHECK_THROWS_AS(ig_transform(cyc, std::set<std::string>{"e"}, parse_term("e(a,a)"), 1000),
                    NonTerminating);
}

TEST_CASE("g recurrence values") {
    CHECK(g_bound(8, 0, 0) == 8);
    CHECK(g_bound(8, 0, 2) == 8);
    for (long long m = 0; m <= 6; ++m)
        CHECK(g_bound(8, m, 0) == bignat_pow(8, static_cast<unsigned long long>(m + 1)));
    // g(1,1) = E^2 + E^(E+2) at E=8: 8^2 + 8^10
    CHECK(g_bound(8, 1, 1) == BigNat(64) + bignat_pow(8, 10));
    CHECK_THROWS_AS(g_bound(8, 3, 5), ArgumentTooLarge);
    CHECK(check_g_closed_form(8, 1, 1).pass);
    CHECK(check_g_closed_form(8, 4, 2).pass);
    CHECK(check_g_closed_form(6, 4, 2).pass);
}

TEST_CASE("tower helpers stay guarded") {
    CHECK(h_tower(1, 0, 2) == bignat_pow(2, 16));
    CHECK_THROWS_AS(h_tower(5, 5, 8), ArgumentTooLarge);
    CHECK(big_g_tower(1, BigNat(0), 1) == 16);
    // the parametrised iteration composes the towers: with f the identity,
    // m = 0 and tiny parameters the value is 1 + F*G(0, h(0,0))
    auto ident = [](const BigNat& v) { return v; };
    CHECK(iterate_bound(ident, 0, 1, 1) == 1 + BigNat(1) * big_g_tower(0, h_tower(0, 0, 1), 1));
    CHECK_THROWS_AS(iterate_bound(ident, 3, 4, 2), ArgumentTooLarge);
}

TEST_CASE("algebra orientation checks") {
    std::set<std::string> vars{"x", "y"};
    // irreflexivity: a -> a cannot be strictly oriented
    {
        AlgebraProblem p;
        p.strict.push_back(Rule{parse_term("a"), parse_term("a")});
        Interpretation alg;
        alg.fns.emplace("a", Expr::constant(1));
        CHECK(!check_algebra(p, alg, AlgebraMode::LinearExact).pass);
        CHECK(!check_algebra(p, alg, AlgebraMode::Sampled, 3).pass);
    }
    // coefficient comparison is exact on affine interpretations: the two
    // modes agree on the sampled grid
    {
        AlgebraProblem p;
        p.strict.push_back(Rule{parse_term("f(x)", vars), parse_term("x", vars)});
        p.weak.push_back(Rule{parse_term("g(x)", vars), parse_term("f(x)", vars)});
        Interpretation alg;
        alg.fns.emplace("f", Expr::arg(0) + Expr::constant(1));
        alg.fns.emplace("g", Expr::constant(2) * Expr::arg(0) + Expr::constant(1));
        BoundReport exact = check_algebra(p, alg, AlgebraMode::LinearExact);
        BoundReport sampled = check_algebra(p, alg, AlgebraMode::Sampled, 6);
        CHECK(exact.pass);
        CHECK(sampled.pass);
    }
    // missing symbols are reported
    {
        AlgebraProblem p;
        p.strict.push_back(Rule{parse_term("f(x)", vars), parse_term("x", vars)});
        Interpretation alg;
        CHECK_THROWS_AS(check_algebra(p, alg, AlgebraMode::LinearExact), MissingInterpretation);
    }
    // exponentiation refuses the exact mode
    {
        AlgebraProblem p;
        p.strict.push_back(Rule{parse_term("f(x)", vars), parse_term("x", vars)});
        Interpretation alg;
        alg.fns.emplace("f", Expr::pow(2, Expr::arg(0)));
        CHECK_THROWS_AS(check_algebra(p, alg, AlgebraMode::LinearExact), NonAffine);
    }
}

TEST_CASE("iterated bound from a compatible algebra") {
    // one-step system: Dc(m) <= m under p(n) = n+1
    {
        Trs trs = parse_trs("(RULES a -> b)");
        Interpretation alg;
        alg.fns.emplace("a", Expr::constant(1));
        alg.fns.emplace("b", Expr::constant(0));
        BoundReport r =
            check_dc_bound_from_algebra(trs, alg, Expr::arg(0) + Expr::constant(1), 3);
        CHECK(r.pass);
    }
    // incompatible interpretation
    {
        Trs re = builtin_example("Re");
        Interpretation alg;
        alg.fns.emplace("d", Expr::arg(0));
        alg.fns.emplace("s", Expr::arg(0) + Expr::constant(1));
        alg.fns.emplace("0", Expr::constant(0));
        CHECK_THROWS_AS(
            check_dc_bound_from_algebra(re, alg, Expr::arg(0) + Expr::constant(1), 3),
            IncompatibleAlgebra);
    }
}

TEST_CASE("report serialization") {
    BoundReport r;
    r.check = "demo";
    r.require("lhs <= rhs", BigNat(3), "<=", BigNat(5));
    r.note("key", "value");
    std::string json = report_to_json(r);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    std::string csv = report_to_csv(r);
    CHECK(csv.find("demo,true") == 0);
}
