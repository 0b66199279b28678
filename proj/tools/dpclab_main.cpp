// dpclab: a desk-scale laboratory for dependency pairs, progenitor graphs,
// derivational complexity measurements, and simulating-system construction.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dpclab/bounds.hpp"
#include "dpclab/examples.hpp"
#include "dpclab/parse.hpp"
#include "dpclab/simtrs.hpp"
#include "dpclab/suites.hpp"

using namespace dpclab;

namespace {

struct CommonOpts {
    std::string example;
    std::string file;
    std::string format = "text";
    size_t budget = kDefaultBudget;
    int max_size = 6;
    int random = 200;
    uint64_t seed = 1;
    int param = 2;
    std::string strategy = "lo";
    int grid = 6;
    std::string trace;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_file = true) {
    cmd->add_option("--example", o.example, "built-in example name");
    if (with_file) cmd->add_option("file", o.file, "TRS file in the text format");
    cmd->add_option("--format", o.format, "text|json|csv|dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    cmd->add_option("--budget", o.budget, "explored-state cap");
    cmd->add_option("--max-size", o.max_size, "maximum start term size");
    cmd->add_option("--random", o.random, "number of random runs");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--param", o.param, "parameter for the Rl family");
    cmd->add_option("--strategy", o.strategy, "li|lo|trace:FILE");
    cmd->add_option("--grid", o.grid, "sampling grid for algebra checks");
    cmd->add_option("--trace", o.trace, "trace file (or built-in trace name)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Trs load_trs(const CommonOpts& o) {
    if (!o.example.empty() && !o.file.empty())
        throw UsageError("give either --example or a file, not both");
    if (!o.example.empty()) return builtin_example(o.example, o.param);
    if (!o.file.empty()) return parse_trs(read_file(o.file));
    throw UsageError("missing input: use --example NAME or a TRS file");
}

Derivation load_trace(const CommonOpts& o, const Trs& trs) {
    if (o.trace.empty()) throw UsageError("missing --trace");
    if (is_builtin_trace(o.trace)) return builtin_trace(o.trace);
    return parse_trace(read_file(o.trace), trs);
}

int report_suite(const SuiteResult& result, const std::string& format) {
    if (format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const BoundReport& r : result.reports) std::cout << report_to_csv(r) << "\n";
    } else if (format == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < result.reports.size(); ++i)
            std::cout << report_to_json(result.reports[i])
                      << (i + 1 < result.reports.size() ? ",\n" : "\n");
        std::cout << "]\n";
    } else {
        for (const BoundReport& r : result.reports)
            std::cout << (r.pass ? "pass  " : "FAIL  ") << r.check << "\n";
        std::cout << (result.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return result.all_pass ? 0 : 1;
}

ArgumentFiltering parse_af_file(const std::string& text) {
    ArgumentFiltering af;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string sym, spec;
        if (!(ls >> sym)) continue;
        if (!(ls >> spec)) throw UsageError("bad filtering line: " + line);
        if (spec.front() == '[') {
            std::vector<int> keep;
            std::string inner = spec.substr(1, spec.size() - 2);
            std::istringstream is(inner);
            std::string part;
            while (std::getline(is, part, ','))
                if (!part.empty()) keep.push_back(std::stoi(part));
            af.pi.emplace(sym, keep);
        } else {
            af.pi.emplace(sym, std::stoi(spec));
        }
    }
    return af;
}

int run(int argc, char** argv) {
    CLI::App app{"term rewriting complexity laboratory"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string term_text, mode, suite, af_file;
    int fast_d = 2, fast_n = 0;
    long long fast_m = 0;

    auto* cmd_parse = app.add_subcommand("parse", "parse and reprint a system");
    add_common(cmd_parse, o);
    auto* cmd_dp = app.add_subcommand("dp", "list the dependency pairs");
    add_common(cmd_dp, o);
    auto* cmd_filter = app.add_subcommand("filter", "apply an argument filtering");
    cmd_filter->add_option("af", af_file, "filtering file: one `symbol spec` per line")
        ->required();
    add_common(cmd_filter, o);
    auto* cmd_graph = app.add_subcommand("graph", "estimated dependency graph");
    add_common(cmd_graph, o);
    auto* cmd_usable = app.add_subcommand("usable", "usable rules and the projection pair");
    add_common(cmd_usable, o);
    auto* cmd_derive = app.add_subcommand("derive", "rewrite a term under a strategy");
    cmd_derive->add_option("term", term_text, "start term")->required();
    add_common(cmd_derive, o);
    auto* cmd_pgraph = app.add_subcommand("pgraph", "progenitor graph of a derivation");
    add_common(cmd_pgraph, o);
    auto* cmd_ig = app.add_subcommand("ig", "reduct-listing interpretation of a term");
    cmd_ig->add_option("term", term_text, "term")->required();
    add_common(cmd_ig, o);
    auto* cmd_measure = app.add_subcommand("measure", "empirical complexity tables");
    cmd_measure->add_option("mode", mode, "dc|dp_complexity|scc_complexity")->required();
    add_common(cmd_measure, o);
    auto* cmd_check = app.add_subcommand("check", "run a verification suite");
    cmd_check->add_option("suite", suite, "progeny|srs|filtering|ig|g|fast|algebra|sim|all")
        ->required();
    add_common(cmd_check, o);
    auto* cmd_simgen = app.add_subcommand("simgen", "generate the simulating system");
    add_common(cmd_simgen, o);
    auto* cmd_simulate = app.add_subcommand("simulate", "witness derivations for a trace");
    add_common(cmd_simulate, o);
    auto* cmd_fast = app.add_subcommand("fast", "evaluate the fast function family");
    cmd_fast->add_option("d", fast_d, "base parameter")->required();
    cmd_fast->add_option("n", fast_n, "level")->required();
    cmd_fast->add_option("m", fast_m, "argument")->required();

    app.parse(argc, argv);

    if (cmd_parse->parsed()) {
        Trs trs = load_trs(o);
        if (o.format == "json") {
            std::ostringstream rules;
            std::cout << "{\n  \"rules\": [";
            for (size_t i = 0; i < trs.rules.size(); ++i)
                std::cout << (i ? ", " : "") << "\"" << rule_to_string(trs.rules[i]) << "\"";
            std::cout << "],\n  \"srs\": " << (trs.is_srs ? "true" : "false") << "\n}\n";
        } else {
            std::cout << print_trs(trs);
        }
        return 0;
    }
    if (cmd_dp->parsed()) {
        Trs trs = load_trs(o);
        DpProblem dp = dependency_pairs(trs);
        for (const Rule& p : dp.pairs) std::cout << rule_to_string(p) << "\n";
        std::cerr << dp.pairs.size() << " dependency pairs\n";
        return 0;
    }
    if (cmd_filter->parsed()) {
        Trs trs = load_trs(o);
        ArgumentFiltering af = parse_af_file(read_file(af_file));
        std::cout << print_trs(apply_filtering(af, trs));
        return 0;
    }
    if (cmd_graph->parsed()) {
        Trs trs = load_trs(o);
        DpProblem dp = dependency_pairs(trs);
        DependencyGraph dg = estimated_dependency_graph(dp);
        if (o.format == "dot") {
            std::cout << dg_to_dot(dp, dg);
        } else if (o.format == "json") {
            std::cout << dg_to_json(dg) << "\n";
        } else {
            std::cout << dg.node_count << " pairs, " << dg.edges.size() << " edges, "
                      << dg.sccs.size() << " sccs\n";
            for (const SccInfo& s : dg.sccs) {
                std::cout << "scc rank " << s.rank << (s.trivial ? " (trivial):" : ":");
                for (int m : s.members) std::cout << " " << m;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (cmd_usable->parsed()) {
        Trs trs = load_trs(o);
        DpProblem dp = dependency_pairs(trs);
        UsableRulesResult ur = usable_rules(dp);
        for (int i : ur.usable)
            std::cout << rule_to_string(trs.rules[static_cast<size_t>(i)]) << "\n";
        std::cout << rule_to_string(ur.ce_first) << "\n" << rule_to_string(ur.ce_second) << "\n";
        return 0;
    }
    if (cmd_derive->parsed()) {
        Trs trs = load_trs(o);
        Term start = parse_term(term_text);
        Derivation d;
        if (o.strategy.rfind("trace:", 0) == 0) {
            CommonOpts t = o;
            t.trace = o.strategy.substr(6);
            d = load_trace(t, trs);
        } else if (o.strategy == "li" || o.strategy == "lo") {
            d = derive(trs, start,
                       o.strategy == "li" ? Strategy::LeftmostInnermost
                                          : Strategy::LeftmostOutermost,
                       o.budget);
        } else {
            throw UsageError("unknown strategy '" + o.strategy + "'");
        }
        std::cout << print_trace(d);
        std::cerr << d.length() << " steps\n";
        return 0;
    }
    if (cmd_pgraph->parsed()) {
        Trs trs = load_trs(o);
        Derivation d = load_trace(o, trs);
        DerivationAnalysis a = analyze(trs, d);
        ProgenitorGraph g = progenitor_graph(a);
        if (o.format == "dot") {
            std::cout << pg_to_dot(g);
        } else if (o.format == "json") {
            std::cout << pg_to_json(g) << "\n";
        } else {
            std::cout << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
            for (const PgNode& n : g.nodes)
                std::cout << "  t" << n.term_index << "@"
                          << (n.pos.is_root() ? "ε" : n.pos.str()) << "\n";
        }
        return 0;
    }
    if (cmd_ig->parsed()) {
        Trs trs = load_trs(o);
        IgResult ig = ig_transform(trs, parse_term(term_text), o.budget);
        std::cout << term_to_string(ig.image) << "\n";
        std::cerr << "size " << ig.size << "\n";
        return 0;
    }
    if (cmd_measure->parsed()) {
        Trs trs = load_trs(o);
        ComplexityMode m = mode == "dc" ? ComplexityMode::Dc
                           : mode == "dp_complexity" ? ComplexityMode::DpComplexity
                           : mode == "scc_complexity"
                               ? ComplexityMode::SccComplexity
                               : throw UsageError("unknown mode '" + mode + "'");
        ComplexityTable table = empirical_complexity(trs, o.max_size, m, o.budget);
        std::cout << "size,value\n";
        for (auto& [size, value] : table.rows) std::cout << size << "," << value << "\n";
        return 0;
    }
    if (cmd_check->parsed()) {
        SuiteOptions opt;
        opt.runs = o.random;
        opt.seed = o.seed;
        opt.budget = o.budget;
        opt.grid = o.grid;
        SuiteResult result;
        if (suite == "progeny") {
            result = progeny_suite(load_trs(o), opt);
        } else if (suite == "srs") {
            result = srs_suite(load_trs(o), opt);
        } else if (suite == "filtering") {
            Trs trs = load_trs(o);
            result = filtering_suite(trs, default_test_filtering(trs), opt);
        } else if (suite == "ig") {
            result = ig_suite(opt);
        } else if (suite == "g") {
            result = g_suite();
        } else if (suite == "fast") {
            result = fast_suite();
        } else if (suite == "algebra") {
            result = algebra_suite(opt);
        } else if (suite == "sim") {
            result = sim_suite(opt);
        } else if (suite == "all") {
            result = all_suites(opt);
        } else {
            throw UsageError("unknown suite '" + suite + "'");
        }
        return report_suite(result, o.format);
    }
    if (cmd_simgen->parsed()) {
        Trs trs = load_trs(o);
        DpProblem dp = dependency_pairs(trs);
        DependencyGraph dg = estimated_dependency_graph(dp);
        SimParams params;
        params.max_arity = 1;
        for (auto& [name, arity] : trs.signature)
            params.max_arity = std::max(params.max_arity, arity);
        params.branching = branching_constant(trs);
        params.scc_count = static_cast<int>(dg.sccs.size());
        params.f_rules = make_f_rules_affine(1, 1);
        std::cout << print_trs(generate_sim_trs(params));
        return 0;
    }
    if (cmd_simulate->parsed()) {
        Trs trs = load_trs(o);
        Derivation d = load_trace(o, trs);
        DpProblem dp = dependency_pairs(trs);
        DependencyGraph dg = estimated_dependency_graph(dp);
        SimParams params;
        params.max_arity = 1;
        for (auto& [name, arity] : trs.signature)
            params.max_arity = std::max(params.max_arity, arity);
        params.branching = branching_constant(trs);
        params.scc_count = static_cast<int>(dg.sccs.size());
        params.f_rules = make_f_rules_affine(1, 1);
        Simulator sim(trs, params, o.budget);
        std::vector<Derivation> witnesses = sim.simulate_derivation(d);
        for (size_t i = 0; i < witnesses.size(); ++i)
            std::cout << "step " << (i + 1) << ": witness with " << witnesses[i].length()
                      << " steps validates\n";
        return 0;
    }
    if (cmd_fast->parsed()) {
        std::cout << bignat_str(fast_function(fast_d, fast_n, fast_m)) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App app;
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
