#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dpclab/dp.hpp"
#include "dpclab/examples.hpp"

using namespace dpclab;

TEST_CASE("bundled examples parse with the expected rule counts") {
    CHECK(builtin_example("Ra").rules.size() == 4);
    CHECK(builtin_example("Rb").rules.size() == 3);
    CHECK(builtin_example("Rnonll").rules.size() == 1);
    CHECK(builtin_example("Rd").rules.size() == 1);
    CHECK(builtin_example("Re").rules.size() == 1);
    CHECK(builtin_example("Rde").rules.size() == 2);
    CHECK(builtin_example("Rebin").rules.size() == 4);
    CHECK(builtin_example("Rack").rules.size() == 2);
}

TEST_CASE("the indexed composition family") {
    Trs r2 = builtin_example("Rl", 2);
    REQUIRE(r2.rules.size() == 1);
    CHECK(rule_to_string(r2.rules[0]) == "∘2(i(x),∘1(y,z)) -> ∘2(x,∘1(i(i(y)),z))");
    Trs r3 = builtin_example("Rl", 3);
    CHECK(r3.rules.size() == 3);
    CHECK_THROWS_AS(builtin_example("Rl", 1), BadParams);

    Term t00 = composition_start_term(0, 0);
    CHECK(term_to_string(t00) == "∘2(i(i(e)),∘1(e,e))");
    Term t02 = composition_start_term(0, 2);
    CHECK(term_to_string(t02) == "∘2(i(i(i(i(i(i(e)))))),∘1(e,e))");
}

TEST_CASE("trace files on disk match the bundled corpus") {
    for (const BuiltinTrace& info : builtin_traces()) {
        std::ifstream in(std::string(DPCLAB_SOURCE_DIR) + "/traces/" + info.name + ".trace",
                         std::ios::binary);
        REQUIRE_MESSAGE(in.good(), info.name);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK_MESSAGE(buf.str() == info.source, info.name);
    }
}
