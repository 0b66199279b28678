// Randomized property batteries: the bound and ancestry laws over seeded
// random derivations, plus the filtering commutation invariant. Prints one line per
// suite; exits nonzero on any violation.

#include <iostream>

#include "dpclab/examples.hpp"
#include "dpclab/suites.hpp"

using namespace dpclab;

namespace {

int failures = 0;

void run(const std::string& label, const SuiteResult& result) {
    int bad = 0;
    for (const BoundReport& r : result.reports)
        if (!r.pass) ++bad;
    std::cout << (result.all_pass ? "pass  " : "FAIL  ") << label << "  ("
              << result.reports.size() << " checks, " << bad << " violations)\n";
    if (!result.all_pass) {
        ++failures;
        for (const BoundReport& r : result.reports)
            if (!r.pass) {
                std::cout << "      " << report_to_csv(r) << "\n";
                break;
            }
    }
}

}  // namespace

int main() {
    SuiteOptions opt;
    opt.runs = 200;
    opt.seed = 1;

    for (const char* name : {"Rb", "Rd", "Re", "Rde", "Rebin"})
        run(std::string("progeny laws on ") + name, progeny_suite(builtin_example(name), opt));
    for (const char* name : {"Re", "Rd"})
        run(std::string("srs bounds on ") + name, srs_suite(builtin_example(name), opt));
    for (const char* name : {"Rb", "Rde"}) {
        Trs trs = builtin_example(name);
        run(std::string("filtering commutation on ") + name,
            filtering_suite(trs, default_test_filtering(trs), opt));
    }
    run("reduct-listing interpretation bounds", ig_suite(opt));
    run("g recurrence properties", g_suite());
    run("fast function properties", fast_suite());
    run("bundled interpretations", algebra_suite(opt));
    run("simulation witnesses", sim_suite(opt));

    if (failures) {
        std::cout << failures << " suite(s) failed\n";
        return 1;
    }
    std::cout << "all property suites passed\n";
    return 0;
}
