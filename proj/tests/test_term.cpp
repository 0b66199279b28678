#include <doctest.h>

#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"
#include "dpclab/term.hpp"

using namespace dpclab;

TEST_CASE("metrics of small terms") {
    Term t = parse_term("f(s(0))");
    TermMetrics m = term_metrics(t);
    CHECK(m.size == 3);
    CHECK(m.depth == 2);

    Term c = parse_term("c");
    CHECK(term_metrics(c).size == 1);
    CHECK(term_metrics(c).depth == 0);

    // one branch per leaf, left to right, each a prefix chain
    Term fb = parse_term("f(h(c,d))");
    auto branches = branches_of(fb);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0] == Branch{Position{}, Position::parse("1"), Position::parse("1.1")});
    CHECK(branches[1] == Branch{Position{}, Position::parse("1"), Position::parse("1.2")});
}

TEST_CASE("position arithmetic") {
    Position root;
    Position p = Position::parse("1.2");
    CHECK(p.str() == "1.2");
    CHECK(root.str().empty());
    CHECK(is_strict_prefix(root, p));
    CHECK(is_prefix(p, p));
    CHECK(!is_strict_prefix(p, p));
    CHECK(is_parallel(Position::parse("1.1"), Position::parse("1.2")));
    // exactly one of <=, >, parallel holds for every pair
    std::vector<Position> ps = {root, Position::parse("1"), Position::parse("1.1"),
                                Position::parse("1.2"), Position::parse("2")};
    for (const Position& a : ps)
        for (const Position& b : ps) {
            int holds = (is_prefix(a, b) ? 1 : 0) + (is_strict_prefix(b, a) ? 1 : 0) +
                        (is_parallel(a, b) ? 1 : 0);
            CHECK(holds == 1);
        }
}

TEST_CASE("matching and replacement") {
    std::set<std::string> vars{"x"};
    Term pat = parse_term("f(s(x))", vars);
    Term sub = parse_term("f(s(0))");
    auto sigma = match(pat, sub);
    REQUIRE(sigma.has_value());
    CHECK(sigma->at(intern_symbol("x")) == parse_term("0"));

    // nonlinear clash
    Term pat2 = parse_term("f(x,x)", vars);
    CHECK(!match(pat2, parse_term("f(0,s(0))")).has_value());

    Term t = parse_term("f(f(c))");
    CHECK(replace_at(t, Position::parse("1.1"), parse_term("d")) == parse_term("f(f(d))"));
    CHECK_THROWS_AS(subterm_at(t, Position::parse("2")), PositionOutOfRange);

    // replace(t, p, t|p) is the identity at every position
    for (const Position& p : positions(t)) CHECK(replace_at(t, p, subterm_at(t, p)) == t);
}

TEST_CASE("parser and round trip") {
    Trs rde = parse_trs("(VAR x) (RULES f(s(x)) -> s(f(f(x))) f(x) -> c(x,x))");
    CHECK(rde.rules.size() == 2);
    CHECK(rde.defined == std::set<std::string>{"f"});
    CHECK(rde.constructors == std::set<std::string>{"c", "s"});
    CHECK(!rde.is_srs);

    // single-rule example with a comment block
    Trs rd = parse_trs("(COMMENT single (nested) rule) (VAR x) (RULES f(s(x)) -> s(f(f(x))))");
    CHECK(rd.rules.size() == 1);
    CHECK(rd.is_srs);

    CHECK(parse_trs("(RULES )").rules.empty());

    CHECK_THROWS_AS(parse_trs("(VAR x y) (RULES x -> y)"), IllFormedRule);
    CHECK_THROWS_AS(parse_trs("(VAR x y) (RULES f(x) -> y)"), IllFormedRule);
    // an undeclared identifier is a constant, not a variable
    CHECK(parse_trs("(VAR x) (RULES f(x) -> y)").constructors.count("y") == 1);
    CHECK_THROWS_AS(parse_trs("(RULES f(a) -> f(a,a))"), ArityClash);
    CHECK_THROWS_AS(parse_trs("(RULES f# -> a)"), SyntaxError);
    CHECK_THROWS_AS(parse_trs("(VAR x) (RULES x(a) -> a)"), SyntaxError);

    // parse . print . parse is a fixpoint
    for (const std::string& name : builtin_example_names()) {
        if (name == "Rl") continue;
        Trs a = builtin_example(name);
        Trs b = parse_trs(print_trs(a));
        REQUIRE(a.rules.size() == b.rules.size());
        for (size_t i = 0; i < a.rules.size(); ++i) CHECK(a.rules[i] == b.rules[i]);
        CHECK(a.signature == b.signature);
        CHECK(print_trs(a) == print_trs(b));
    }
}

TEST_CASE("branching constants") {
    CHECK(branching_constant(builtin_example("Rde")) == 3);
    CHECK(branching_constant(builtin_example("Rb")) == 2);
    CHECK(branching_constant(parse_trs("(RULES )")) == 2);
}

TEST_CASE("ground enumeration") {
    Trs rb = builtin_example("Rb");
    std::vector<Term> terms = enumerate_ground_terms(rb.signature, 3);
    // sizes are nondecreasing and within bounds, no duplicates
    std::set<Term> seen;
    uint32_t last = 1;
    for (Term t : terms) {
        CHECK(t->size >= last);
        last = t->size;
        CHECK(t->size <= 3);
        CHECK(seen.insert(t).second);
        CHECK(is_ground(t));
    }
    // Rb has constants c and d; sizes 1..3 over {f/1,g/2,h/2,c/0,d/0}
    CHECK(terms.size() == 2 + 2 + (2 + 4 + 4));

    // a signature without constants gets the fresh constant
    std::map<std::string, int> unary{{"f", 1}};
    std::vector<Term> fresh = enumerate_ground_terms(unary, 2);
    REQUIRE(fresh.size() == 2);
    CHECK(term_to_string(fresh[0]) == "⋄");

    // size <= max_arity^(depth+1) over signatures with arity >= 2
    for (Term t : enumerate_ground_terms(rb.signature, 7)) {
        long long bound = 1;
        for (uint32_t i = 0; i <= t->depth; ++i) bound *= 2;
        CHECK(static_cast<long long>(t->size) <= bound);
    }
}
