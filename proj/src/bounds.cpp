#include "dpclab/bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace dpclab {

void BoundReport::require(const std::string& name, const BigNat& lhs, const std::string& rel,
                          const BigNat& rhs) {
    bool holds = rel == "<=" ? lhs <= rhs
                 : rel == "<" ? lhs < rhs
                 : rel == ">=" ? lhs >= rhs
                 : rel == ">" ? lhs > rhs
                              : lhs == rhs;
    inequalities.push_back(Inequality{name + " (" + rel + ")", bignat_str(lhs), bignat_str(rhs),
                                      holds});
    pass = pass && holds;
}

void BoundReport::require(const std::string& name, const std::string& lhs, const std::string& rhs,
                          bool holds) {
    inequalities.push_back(Inequality{name, lhs, rhs, holds});
    pass = pass && holds;
}

void BoundReport::fail(const std::string& why) {
    inequalities.push_back(Inequality{why, "", "", false});
    pass = false;
}

std::string report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["lhs"] = r.inequalities.empty() ? "" : r.inequalities.front().lhs;
    j["rhs"] = r.inequalities.empty() ? "" : r.inequalities.front().rhs;
    j["inequalities"] = nlohmann::json::array();
    for (const Inequality& q : r.inequalities)
        j["inequalities"].push_back(
            {{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"holds", q.holds}});
    j["witness"] = r.witness;
    return j.dump(2);
}

std::string report_csv_header() { return "check,pass,detail"; }

std::string report_to_csv(const BoundReport& r) {
    std::string detail;
    for (const Inequality& q : r.inequalities) {
        if (!detail.empty()) detail += "; ";
        detail += q.name + ": " + q.lhs + " vs " + q.rhs + (q.holds ? " ok" : " VIOLATED");
    }
    for (auto& [k, v] : r.witness) {
        if (!detail.empty()) detail += "; ";
        detail += k + "=" + v;
    }
    std::string quoted = "\"";
    for (char c : detail) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return r.check + "," + (r.pass ? "true" : "false") + "," + quoted;
}

// ---------------------------------------------------------------------------
// depth and SRS bounds
// ---------------------------------------------------------------------------

namespace {

// m = max over subterms s' of the start term of dh((s')♯, DP(R)/R)
long long max_marked_subterm_height(const Trs& trs, Term start, size_t budget,
                                    RelativeHeightEngine* shared) {
    std::unique_ptr<RelativeHeightEngine> own;
    RelativeHeightEngine* engine = shared;
    if (!engine) {
        DpProblem dp = dependency_pairs(trs);
        own = std::make_unique<RelativeHeightEngine>(dp.pairs_trs(), dp.base);
        engine = own.get();
    }
    long long m = 0;
    std::set<Term> subs;
    for (const Position& p : positions(start)) subs.insert(subterm_at(start, p));
    for (Term s : subs) m = std::max(m, engine->height(mark_root(s), budget));
    return m;
}

}  // namespace

BoundReport check_depth_bound(const Trs& trs, const Derivation& d, size_t budget,
                              RelativeHeightEngine* shared_engine) {
    BoundReport r;
    r.check = "depth_bound";
    long long C = branching_constant(trs);
    long long m = max_marked_subterm_height(trs, d.initial, budget, shared_engine);
    BigNat bound = BigNat(d.initial->size) * bignat_pow(BigNat(C), static_cast<unsigned long long>(m + 2));
    r.require("depth(t_n) <= |t_1|*C^(m+2)", BigNat(d.final_term()->depth), "<=", bound);
    r.note("C", std::to_string(C));
    r.note("m", std::to_string(m));
    r.note("start", term_to_string(d.initial));
    r.note("steps", std::to_string(d.length()));
    return r;
}

BoundReport check_srs_bounds(const Trs& trs, const Derivation& d, size_t budget,
                             RelativeHeightEngine* shared_engine) {
    if (!trs.is_srs) throw NotAnSrs("check_srs_bounds: system has a symbol of arity > 1");
    BoundReport r;
    r.check = "srs_bounds";
    DerivationAnalysis a = analyze(trs, d);
    ProgenitorGraph g = progenitor_graph(a);
    long long steps = static_cast<long long>(d.length());
    r.require("nodes(G) >= steps", BigNat(g.nodes.size()), ">=", BigNat(steps));
    long long C = branching_constant(trs);
    long long m = max_marked_subterm_height(trs, d.initial, budget, shared_engine);
    BigNat bound = BigNat(d.initial->size) * bignat_pow(BigNat(C), static_cast<unsigned long long>(m + 1));
    r.require("steps <= |t_1|*C^(m+1)", BigNat(steps), "<=", bound);
    r.note("C", std::to_string(C));
    r.note("m", std::to_string(m));
    r.note("start", term_to_string(d.initial));
    return r;
}

// ---------------------------------------------------------------------------
// the reduct-listing interpretation
// ---------------------------------------------------------------------------

IgResult ig_transform(const Trs& trs, Term t, size_t budget) {
    DpProblem dp = dependency_pairs(trs);
    UsableRulesResult ur = usable_rules(dp);
    std::set<int> usable(ur.usable.begin(), ur.usable.end());
    std::set<std::string> g_symbols;
    for (int i = 0; i < static_cast<int>(trs.rules.size()); ++i)
        if (!usable.count(i))
            g_symbols.insert(symbol_name(root(trs.rules[static_cast<size_t>(i)].lhs)));
    return ig_transform(trs, g_symbols, t, budget);
}

IgResult ig_transform(const Trs& trs, const std::set<std::string>& g_symbols, Term t,
                      size_t budget) {
    std::string cons_name = trs.signature.count("cons") ? "cons#" : "cons";
    std::string nil_name = trs.signature.count("nil") ? "nil#" : "nil";
    Term nil = make_fun(nil_name);

    std::unordered_map<Term, Term> memo;
    std::unordered_set<Term> gray;
    size_t visited = 0;

    auto order_less = [](Term a, Term b) {
        if (a->size != b->size) return a->size < b->size;
        return term_to_string(a) < term_to_string(b);
    };

    std::function<Term(Term)> rec = [&](Term u) -> Term {
        if (is_var(u)) return u;
        if (auto it = memo.find(u); it != memo.end()) return it->second;
        if (gray.count(u))
            throw NonTerminating("ig_transform: cycle below " + term_to_string(u));
        if (++visited > budget) throw BudgetExceeded("ig_transform: budget exceeded");
        gray.insert(u);
        std::vector<Term> args;
        args.reserve(u->args.size());
        for (Term a : u->args) args.push_back(rec(a));
        Term image;
        if (!g_symbols.count(symbol_name(u->sym))) {
            image = make_fun(u->sym, std::move(args));
        } else {
            std::vector<Term> reduct_images;
            for (const RewriteStep& s : one_step_reducts(trs, u)) reduct_images.push_back(rec(s.target));
            std::sort(reduct_images.begin(), reduct_images.end(), order_less);
            reduct_images.erase(std::unique(reduct_images.begin(), reduct_images.end()),
                                reduct_images.end());
            Term list = nil;
            for (auto it = reduct_images.rbegin(); it != reduct_images.rend(); ++it)
                list = make_fun(cons_name, {*it, list});
            image = make_fun(cons_name, {make_fun(u->sym, std::move(args)), list});
        }
        gray.erase(u);
        memo[u] = image;
        return image;
    };
    Term image = rec(t);
    return IgResult{image, static_cast<long long>(image->size)};
}

long long ig_size_constant(const Trs& trs) {
    long long a = 0;
    for (auto& [name, arity] : trs.signature) a = std::max(a, static_cast<long long>(arity));
    long long b = static_cast<long long>(trs.rules.size());
    long long c = 0;
    for (const Rule& r : trs.rules) {
        std::map<Sym, long long> occ;
        for (const Position& p : var_positions(r.rhs)) occ[subterm_at(r.rhs, p)->sym]++;
        for (auto& [v, n] : occ) c = std::max(c, n);
        c = std::max(c, static_cast<long long>(r.rhs->size));
    }
    c += 1;
    return std::max({static_cast<long long>(2), a, b, c}) + 3;
}

// ---------------------------------------------------------------------------
// g, h and tower bounds
// ---------------------------------------------------------------------------

namespace {
struct GKey {
    long long m, n;
    bool operator==(const GKey& o) const { return m == o.m && n == o.n; }
};
struct GKeyHash {
    size_t operator()(const GKey& k) const {
        return std::hash<long long>()(k.m) * 1000003u ^ std::hash<long long>()(k.n);
    }
};

BigNat g_rec(long long E, long long m, long long n,
             std::unordered_map<GKey, BigNat, GKeyHash>& memo) {
    if (m == 0) return E;
    GKey key{m, n};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigNat res;
    if (n == 0) {
        res = E * g_rec(E, m - 1, 0, memo);
    } else {
        res = E * g_rec(E, m - 1, n, memo) + BigNat(E) * m * g_rec(E, E * m, n - 1, memo);
    }
    memo[key] = res;
    return res;
}
}  // namespace

BigNat g_bound(long long E, long long m, long long n) {
    if (E < 2 || m < 0 || n < 0) throw ArgumentTooLarge("g_bound: bad arguments");
    if (n > 2 || m > 8)
        throw ArgumentTooLarge("g_bound: guarded to n <= 2, m <= 8 at the entry point");
    std::unordered_map<GKey, BigNat, GKeyHash> memo;
    return g_rec(E, m, n, memo);
}

BoundReport check_g_closed_form(long long E, long long m, long long n) {
    BoundReport r;
    r.check = "g_closed_form";
    BigNat g = g_bound(E, m, n);
    BigNat base = BigNat(E) * (n + 1);
    BigNat exponent = BigNat(n + 1) * bignat_pow(BigNat(E), static_cast<unsigned long long>(2 * m + 1));
    std::string rhs_desc = base.str() + "^" + exponent.str();
    bool holds;
    if (exponent * static_cast<long long>(floor_log2(base)) >= static_cast<long long>(bit_length(g))) {
        // base^exponent >= 2^(floor_log2(base)*exponent) >= 2^bitlen(g) > g
        holds = true;
    } else if (exponent <= 1000000) {
        holds = g <= bignat_pow(base, exponent.convert_to<unsigned long long>());
    } else {
        holds = false;  // could not verify within bounds
    }
    r.require("g(m,n) <= (E(n+1))^((n+1)E^(2m+1))", bignat_str(g), rhs_desc, holds);
    r.note("E", std::to_string(E));
    r.note("m", std::to_string(m));
    r.note("n", std::to_string(n));
    return r;
}

BigNat h_tower(long long m, long long n, long long F, size_t bit_cap) {
    // 2^(2^(m*2^(F*(n+1))))
    BigNat inner_exp = BigNat(F) * (n + 1);
    if (inner_exp > static_cast<long long>(bit_cap))
        throw ArgumentTooLarge("h_tower: inner exponent too large");
    BigNat mid = BigNat(m) * bignat_pow(BigNat(2), inner_exp.convert_to<unsigned long long>());
    if (mid > static_cast<long long>(bit_cap)) throw ArgumentTooLarge("h_tower: middle level too large");
    BigNat outer = bignat_pow(BigNat(2), mid.convert_to<unsigned long long>());
    if (outer > static_cast<long long>(bit_cap))
        throw ArgumentTooLarge("h_tower: outer exponent too large");
    return bignat_pow(BigNat(2), outer.convert_to<unsigned long long>());
}

BigNat big_g_tower(long long m, const BigNat& n, long long d, size_t bit_cap) {
    // 2^(2^(d*(m+n+1)))
    BigNat mid = BigNat(d) * (BigNat(m) + n + 1);
    if (mid > static_cast<long long>(bit_cap)) throw ArgumentTooLarge("big_g_tower: level too large");
    BigNat outer = bignat_pow(BigNat(2), mid.convert_to<unsigned long long>());
    if (outer > static_cast<long long>(bit_cap))
        throw ArgumentTooLarge("big_g_tower: outer exponent too large");
    return bignat_pow(BigNat(2), outer.convert_to<unsigned long long>());
}

BigNat iterate_bound(const std::function<BigNat(const BigNat&)>& f, long long m, long long F,
                     long long d, size_t bit_cap) {
    return f(1 + BigNat(F) * big_g_tower(m, h_tower(m, m, F, bit_cap), d, bit_cap));
}

// ---------------------------------------------------------------------------
// algebra checks
// ---------------------------------------------------------------------------

namespace {

// orders lhs/rhs values at every grid assignment; returns the assignment
// minimizing lhs - rhs together with its values
struct SampleOutcome {
    bool all_hold = true;
    BigNat worst_l = 0, worst_r = 0;
    bool first = true;
};

void sample_rule(const Interpretation& alg, const Rule& rule, bool strict, int grid,
                 SampleOutcome& out) {
    std::set<Sym> vs = variables_of(rule.lhs);
    std::vector<Sym> vars(vs.begin(), vs.end());
    std::vector<int> assign(vars.size(), 0);
    while (true) {
        std::map<Sym, BigNat> env;
        for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = assign[i];
        BigNat l = alg.eval_term(rule.lhs, env);
        BigNat r = alg.eval_term(rule.rhs, env);
        bool holds = strict ? l > r : l >= r;
        BigNat margin = l - r;
        if (out.first || !holds || (out.all_hold && margin < out.worst_l - out.worst_r)) {
            out.worst_l = l;
            out.worst_r = r;
            out.first = false;
        }
        if (!holds) {
            out.all_hold = false;
            return;
        }
        size_t j = 0;
        for (; j < vars.size(); ++j) {
            if (++assign[j] <= grid) break;
            assign[j] = 0;
        }
        if (j == vars.size() || vars.empty()) break;
    }
}

bool affine_orient(const Interpretation& alg, const Rule& rule, bool strict) {
    std::set<Sym> vs = variables_of(rule.lhs);
    std::vector<Sym> vars(vs.begin(), vs.end());
    std::vector<BigNat> lc, rc;
    BigNat l0, r0;
    alg.term_affine(rule.lhs, vars, lc, l0);
    alg.term_affine(rule.rhs, vars, rc, r0);
    for (size_t i = 0; i < vars.size(); ++i)
        if (lc[i] < rc[i]) return false;
    return strict ? l0 >= r0 + 1 : l0 >= r0;
}

}  // namespace

BoundReport check_algebra(const AlgebraProblem& problem, const Interpretation& alg,
                          AlgebraMode mode, int grid) {
    BoundReport r;
    r.check = mode == AlgebraMode::LinearExact ? "algebra_linear_exact" : "algebra_sampled";
    for (const Rule& rule : problem.strict)
        if (!alg.covers(rule.lhs) || !alg.covers(rule.rhs))
            throw MissingInterpretation("check_algebra: uninterpreted symbol in " +
                                        rule_to_string(rule));
    for (const Rule& rule : problem.weak)
        if (!alg.covers(rule.lhs) || !alg.covers(rule.rhs))
            throw MissingInterpretation("check_algebra: uninterpreted symbol in " +
                                        rule_to_string(rule));

    auto handle = [&](const Rule& rule, bool strict) {
        std::string label = std::string(strict ? "strict: " : "weak: ") + rule_to_string(rule);
        if (mode == AlgebraMode::LinearExact) {
            bool ok = affine_orient(alg, rule, strict);
            r.require(label, "[lhs]", strict ? "[rhs] (coefficient-wise >)" : "[rhs] (coefficient-wise >=)",
                      ok);
        } else {
            SampleOutcome out;
            sample_rule(alg, rule, strict, grid, out);
            r.require(label, out.worst_l, strict ? ">" : ">=", out.worst_r);
        }
    };
    for (const Rule& rule : problem.strict) handle(rule, true);
    for (const Rule& rule : problem.weak) handle(rule, false);
    if (mode == AlgebraMode::Sampled)
        r.note("soundness", "sampled over {0.." + std::to_string(grid) + "}^vars: refutation only");
    return r;
}

BoundReport check_dc_bound_from_algebra(const Trs& trs, const Interpretation& alg, const Expr& p,
                                        int n, size_t budget, int grid) {
    // compatibility: every rule strictly decreasing
    AlgebraProblem compat;
    compat.strict = trs.rules;
    bool all_affine = true;
    for (auto& [name, e] : alg.fns) all_affine = all_affine && e.is_affine();
    BoundReport cr = check_algebra(compat, alg,
                                   all_affine ? AlgebraMode::LinearExact : AlgebraMode::Sampled,
                                   grid);
    if (!cr.pass)
        throw IncompatibleAlgebra("check_dc_bound_from_algebra: algebra is not compatible with the rules");

    BoundReport r;
    r.check = "dc_bound_from_algebra";
    // p dominates f_A(n,...,n) on the sampled range
    for (auto& [name, e] : alg.fns) {
        int arity = trs.signature.count(name) ? trs.signature.at(name) : 0;
        for (int v = 0; v <= grid; ++v) {
            std::vector<BigNat> args(static_cast<size_t>(arity), BigNat(v));
            BigNat fv = e.eval(args);
            BigNat pv = p.eval({BigNat(v)});
            if (pv < fv) {
                r.require("p(n) >= " + name + "_A(n,..,n) at n=" + std::to_string(v), pv, ">=", fv);
                return r;
            }
        }
    }
    ComplexityTable dc = empirical_complexity(trs, n, ComplexityMode::Dc, budget);
    BigNat iter = 0;
    for (auto& [m, value] : dc.rows) {
        iter = p.eval({iter});  // p^m(0)
        r.require("Dc(" + std::to_string(m) + ") <= p^" + std::to_string(m) + "(0)",
                  BigNat(value), "<=", iter);
    }
    return r;
}

}  // namespace dpclab
