#include "dpclab/simtrs.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace dpclab {

// ---------------------------------------------------------------------------
// sccheight
// ---------------------------------------------------------------------------

struct SccHeightOracle::Impl {
    Trs base;
    DpProblem dp;
    DependencyGraph dg;
    size_t budget;
    // engine per rank (1-based); rank r at index r-1
    std::vector<std::unique_ptr<RelativeHeightEngine>> engines;
    std::unordered_map<Term, SccHeight> memo;

    Impl(const Trs& b, const DpProblem& d, const DependencyGraph& g, size_t bud)
        : base(b), dp(d), dg(g), budget(bud) {
        int k = static_cast<int>(dg.sccs.size());
        engines.resize(static_cast<size_t>(k));
        for (const SccInfo& scc : dg.sccs)
            engines[static_cast<size_t>(scc.rank - 1)] =
                std::make_unique<RelativeHeightEngine>(dp.pairs_trs(scc.members), base);
    }

    SccHeight height(Term t) {
        if (auto it = memo.find(t); it != memo.end()) return it->second;
        SccHeight result{0, 0};
        if (!is_var(t)) {
            Term marked = mark_root(t);
            for (int rank = static_cast<int>(engines.size()); rank >= 1; --rank) {
                long long h = engines[static_cast<size_t>(rank - 1)]->height(marked, budget);
                if (h >= 1) {
                    result = SccHeight{rank, h};
                    break;
                }
            }
            if (result.rank == 0)
                result = base.is_defined(t->sym) ? SccHeight{0, 1} : SccHeight{0, 0};
        }
        memo[t] = result;
        return result;
    }
};

SccHeightOracle::SccHeightOracle(const Trs& base, const DpProblem& dp, const DependencyGraph& dg,
                                 size_t budget)
    : impl_(new Impl(base, dp, dg, budget)) {}
SccHeightOracle::~SccHeightOracle() = default;
SccHeight SccHeightOracle::sccheight(Term t) { return impl_->height(t); }
const DpProblem& SccHeightOracle::dp() const { return impl_->dp; }
const DependencyGraph& SccHeightOracle::dg() const { return impl_->dg; }

SccHeight sccheight(const Trs& trs, const DpProblem& dp, const DependencyGraph& dg, Term t,
                    size_t budget) {
    SccHeightOracle oracle(trs, dp, dg, budget);
    return oracle.sccheight(t);
}

// ---------------------------------------------------------------------------
// the generated system
// ---------------------------------------------------------------------------

namespace {

std::string g_symbol_name(int i) { return "g" + std::to_string(i); }

Term numeral(long long n) {
    Term t = make_fun("0");
    for (long long i = 0; i < n; ++i) t = make_fun("s", {t});
    return t;
}

std::optional<long long> read_numeral(Term t) {
    long long n = 0;
    Sym s = intern_symbol("s"), zero = intern_symbol("0");
    while (!is_var(t) && t->sym == s && t->args.size() == 1) {
        ++n;
        t = t->args[0];
    }
    if (is_var(t) || t->sym != zero || !t->args.empty()) return std::nullopt;
    return n;
}

}  // namespace

int SimSystem::rule1(int i) const { return i; }
int SimSystem::rule2(int i) const { return (params.scc_count + 1) + (i - 1); }
int SimSystem::rule3(int i, int j) const {
    return (params.scc_count + 1) + params.scc_count + i * params.max_arity + (j - 1);
}
int SimSystem::rule4() const { return rule3(params.scc_count, params.max_arity) + 1; }
int SimSystem::rule5() const { return rule4() + 1; }
int SimSystem::rule6() const { return rule5() + 1; }
int SimSystem::rule7() const { return rule6() + 1; }
int SimSystem::rule8(int i, int j) const {
    return rule7() + 1 + i * params.max_arity + (j - 1);
}
int SimSystem::rule9() const { return rule8(params.scc_count, params.max_arity) + 1; }
int SimSystem::rule10() const { return rule9() + 1; }
std::vector<int> SimSystem::f_rule_indices() const {
    std::vector<int> out;
    for (int i = rule10() + 1; i < static_cast<int>(rules.rules.size()); ++i) out.push_back(i);
    return out;
}

int SimSystem::g_index(Sym s) const {
    const std::string& name = symbol_name(s);
    for (int i = 0; i <= params.scc_count; ++i)
        if (g_names[static_cast<size_t>(i)] == name) return i;
    return -1;
}

SimSystem generate_sim_system(const SimParams& params) {
    if (params.max_arity < 1 || params.branching < 2 || params.scc_count < 1)
        throw BadParams("generate_sim_trs: need a >= 1, C >= 2, k >= 1");
    int a = params.max_arity, C = params.branching, k = params.scc_count;

    SimSystem sys;
    sys.params = params;
    for (int i = 0; i <= k; ++i) sys.g_names.push_back(g_symbol_name(i));
    sys.size_name = "size";
    sys.dup_name = "d" + std::to_string(a);
    sys.c_name = "c";
    sys.g_name = "g";
    sys.z_name = "z";

    std::set<std::string> reserved(sys.g_names.begin(), sys.g_names.end());
    reserved.insert({sys.size_name, sys.dup_name, sys.c_name, sys.g_name, sys.z_name});
    for (auto& [name, arity] : params.f_rules.signature)
        if (reserved.count(name))
            throw BadParams("generate_sim_trs: f rules use the reserved symbol '" + name + "'");
    if (!params.f_rules.defined.count(params.f_symbol))
        throw BadParams("generate_sim_trs: f rules do not define '" + params.f_symbol + "'");

    Term x = make_var("x");
    std::vector<Term> xs;
    for (int j = 1; j <= a; ++j) xs.push_back(make_var("x" + std::to_string(j)));
    Term zero = make_fun("0");
    Term c = make_fun(sys.c_name);
    std::vector<Term> cs(static_cast<size_t>(a), c);

    auto gi = [&](int i, Term head, const std::vector<Term>& rest) {
        std::vector<Term> args{head};
        args.insert(args.end(), rest.begin(), rest.end());
        return make_fun(sys.g_names[static_cast<size_t>(i)], std::move(args));
    };
    std::function<Term(int, int)> M = [&](int i, int j) -> Term {
        if (j == 0) return gi(i, x, xs);
        Term inner = M(i, j - 1);
        return gi(i, x, std::vector<Term>(static_cast<size_t>(a), inner));
    };

    std::vector<Rule> rules;
    for (int i = 0; i <= k; ++i)
        rules.push_back(Rule{gi(i, make_fun("s", {x}), xs), M(i, C)});
    for (int i = 1; i <= k; ++i)
        rules.push_back(Rule{
            gi(i, x, xs),
            gi(i - 1,
               make_fun(params.f_symbol, {make_fun(sys.size_name, {gi(0, zero, xs)})}), xs)});
    for (int i = 0; i <= k; ++i)
        for (int j = 1; j <= a; ++j)
            rules.push_back(Rule{make_fun(sys.size_name, {gi(i, x, xs)}),
                                 make_fun(sys.dup_name,
                                          {make_fun(sys.size_name, {xs[static_cast<size_t>(j - 1)]})})});
    rules.push_back(Rule{make_fun(sys.size_name, {c}), make_fun("s", {zero})});
    {
        Term body = make_fun(sys.dup_name, {x});
        for (int i = 0; i < a; ++i) body = make_fun("s", {body});
        rules.push_back(Rule{make_fun(sys.dup_name, {make_fun("s", {x})}), body});
    }
    rules.push_back(Rule{make_fun(sys.dup_name, {zero}), zero});
    rules.push_back(Rule{gi(0, x, xs), c});
    for (int i = 0; i <= k; ++i)
        for (int j = 1; j <= a; ++j)
            rules.push_back(Rule{gi(i, x, xs), xs[static_cast<size_t>(j - 1)]});
    {
        std::vector<Term> copies(static_cast<size_t>(a), x);
        rules.push_back(Rule{
            make_fun(sys.g_name, {x}),
            gi(k, make_fun(params.f_symbol, {make_fun(sys.size_name, {gi(0, zero, copies)})}),
               copies)});
        rules.push_back(Rule{
            make_fun(sys.z_name),
            gi(k, make_fun(params.f_symbol, {make_fun(sys.size_name, {gi(0, zero, cs)})}), cs)});
    }
    rules.insert(rules.end(), params.f_rules.rules.begin(), params.f_rules.rules.end());
    sys.rules = make_trs(std::move(rules));
    return sys;
}

Trs generate_sim_trs(const SimParams& params) { return generate_sim_system(params).rules; }

Trs make_f_rules_const(int c0, const std::string& f_symbol) {
    Term x = make_var("x");
    return make_trs({Rule{make_fun(f_symbol, {x}), numeral(c0)}});
}

Trs make_f_rules_affine(int c1, int c0, const std::string& f_symbol) {
    Term x = make_var("x");
    Term fx = make_fun(f_symbol, {x});
    Term step = fx;
    for (int i = 0; i < c1; ++i) step = make_fun("s", {step});
    return make_trs({Rule{make_fun(f_symbol, {make_fun("0")}), numeral(c0)},
                     Rule{make_fun(f_symbol, {make_fun("s", {x})}), step}});
}

// ---------------------------------------------------------------------------
// tr
// ---------------------------------------------------------------------------

namespace {

Term tr_rec(SccHeightOracle& oracle, int a, Term t, std::unordered_map<Term, Term>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    SccHeight sh = oracle.sccheight(t);
    std::vector<Term> args{numeral(sh.height)};
    for (Term child : t->args) args.push_back(tr_rec(oracle, a, child, memo));
    Term c = make_fun("c");
    while (static_cast<int>(args.size()) < a + 1) args.push_back(c);
    Term image = make_fun(g_symbol_name(static_cast<int>(sh.rank)), std::move(args));
    memo[t] = image;
    return image;
}

}  // namespace

Term tr_encode(SccHeightOracle& oracle, int max_arity, Term t) {
    if (!is_ground(t)) throw BadParams("tr_encode: term must be ground");
    std::unordered_map<Term, Term> memo;
    return tr_rec(oracle, max_arity, t, memo);
}

Term tr_encode(const Trs& trs, const DpProblem& dp, const DependencyGraph& dg, Term t,
               size_t budget) {
    SccHeightOracle oracle(trs, dp, dg, budget);
    int a = 1;
    for (auto& [name, arity] : trs.signature) a = std::max(a, arity);
    return tr_encode(oracle, a, t);
}

// ---------------------------------------------------------------------------
// the simulator
// ---------------------------------------------------------------------------

struct Simulator::Impl {
    Trs base;
    DpProblem dp;
    DependencyGraph dg;
    SccHeightOracle oracle;
    SimSystem sys;
    size_t budget;
    std::unordered_map<Term, Term> tr_memo;
    Term c_term;

    // witness under construction
    Term current = nullptr;
    std::vector<RewriteStep> steps;
    size_t step_cap = 2000000;

    Impl(const Trs& b, SimParams params, size_t bud)
        : base(b),
          dp(dependency_pairs(b)),
          dg(estimated_dependency_graph(dp)),
          oracle(base, dp, dg, bud),
          sys(generate_sim_system(params)),
          budget(bud) {
        c_term = make_fun(sys.c_name);
        if (params.scc_count != static_cast<int>(dg.sccs.size()))
            throw BadParams("Simulator: k does not match the SCC count of the system");
    }

    Term tr(Term t) {
        if (!is_ground(t)) throw BadParams("tr: term must be ground");
        return tr_rec(oracle, sys.params.max_arity, t, tr_memo);
    }

    // --- witness building ---------------------------------------------------

    void emit(const Position& pos, int rule_index) {
        if (steps.size() >= step_cap) throw SimulationFailed("witness exceeds the step cap");
        auto st = step_at(sys.rules, current, pos, rule_index);
        if (!st)
            throw SimulationFailed("constructed step does not validate: rule " +
                                   std::to_string(rule_index) + " at " + pos.str() + " in " +
                                   term_to_string(current));
        steps.push_back(*st);
        current = st->target;
    }

    Term at(const Position& q) { return subterm_at(current, q); }

    int g_index_at(const Position& q) {
        int i = sys.g_index(at(q)->sym);
        if (i < 0)
            throw SimulationFailed("expected an indexed duplication symbol at " + q.str() +
                                   ", found " + term_to_string(at(q)));
        return i;
    }

    long long counter_at(const Position& q) {
        auto v = read_numeral(at(q)->args[0]);
        if (!v) throw SimulationFailed("expected a numeral counter at " + q.str());
        return *v;
    }

    // g_i(s(x), xs) ->+ g_i(x, xs)
    void decrement(const Position& q) {
        int i = g_index_at(q);
        emit(q, sys.rule1(i));
        for (int j = 0; j < sys.params.branching; ++j) emit(q, sys.rule8(i, 1));
    }

    // g_i(x, xs) ->+ c
    void collapse(const Position& q) {
        if (at(q) == c_term) return;
        int i = g_index_at(q);
        for (int idx = i; idx >= 1; --idx) emit(q, sys.rule2(idx));
        emit(q, sys.rule7());
    }

    // current at q: size(T) with T the tr image shape of `underlying`;
    // rewrites to a numeral s^L(0) with L >= |underlying| for a >= 2
    long long size_resolve(const Position& q, Term underlying) {
        int a = sys.params.max_arity;
        Position arg = q.child(1);
        long long inner;
        if (underlying->size == 1) {
            int i = g_index_at(arg);
            emit(q, sys.rule3(i, 1));  // size(T) -> d_a(size(c))
            emit(q.child(1), sys.rule4());
            inner = 1;
        } else {
            size_t jstar = 0;
            for (size_t j = 1; j < underlying->args.size(); ++j)
                if (underlying->args[j]->size > underlying->args[jstar]->size) jstar = j;
            int i = g_index_at(arg);
            emit(q, sys.rule3(i, static_cast<int>(jstar) + 1));
            inner = size_resolve(q.child(1), underlying->args[jstar]);
        }
        // d_a(s^inner(0)) ->* s^(a*inner)(0)
        Position dpos = q;
        for (long long step = 0; step < inner; ++step) {
            emit(dpos, sys.rule5());
            for (int j = 0; j < a; ++j) dpos = dpos.child(1);
        }
        emit(dpos, sys.rule6());
        return a * inner;
    }

    // current at q: f(s^L(0)); normalizes with the f rules to a numeral
    long long f_normalize(const Position& q) {
        std::vector<int> f_rules = sys.f_rule_indices();
        for (size_t guard = 0; guard < step_cap; ++guard) {
            Term sub = at(q);
            if (auto v = read_numeral(sub)) return *v;
            bool stepped = false;
            for (const Position& pos : positions(sub)) {
                for (int idx : f_rules) {
                    if (step_at(sys.rules, current, q.concat(pos), idx)) {
                        emit(q.concat(pos), idx);
                        stepped = true;
                        break;
                    }
                }
                if (stepped) break;
            }
            if (!stepped)
                throw SimulationFailed("f rules are stuck on " + term_to_string(at(q)));
        }
        throw SimulationFailed("f rules do not normalize to a numeral");
    }

    // current at q: g_i(s^m(0), xs); adjusts the head to the target measure
    void head_fix(const Position& q, const SccHeight& target, Term underlying) {
        int i = g_index_at(q);
        if (i == static_cast<int>(target.rank)) {
            long long mcur = counter_at(q);
            if (mcur < target.height)
                throw SimulationFailed("head counter " + std::to_string(mcur) +
                                       " below the target height " + target.str());
            for (long long j = target.height; j < mcur; ++j) decrement(q);
        } else if (i > static_cast<int>(target.rank)) {
            for (int idx = i; idx > static_cast<int>(target.rank); --idx)
                emit(q, sys.rule2(idx));
            size_resolve(q.child(1).child(1), underlying);
            long long F = f_normalize(q.child(1));
            if (F < target.height)
                throw SimulationFailed("f value " + std::to_string(F) +
                                       " does not dominate the target height " + target.str());
            for (long long j = target.height; j < F; ++j) decrement(q);
        } else {
            throw SimulationFailed("head index below the target rank");
        }
    }

    // current at q: M^lvl_i(s^(m-1)(0), X) with X_j = tr(l_j sigma); rewrites
    // it to tr(u sigma)
    void claim_realize(const Position& q, Term u, int lvl, Term lhs, const Substitution& sigma,
                       int i) {
        Term target = apply_subst(u, sigma);
        // projection shortcut: u's instance already occurs inside the lhs instance
        std::optional<Position> hit;
        for (const Position& p : positions(lhs)) {
            if (p.is_root()) continue;
            if (apply_subst(subterm_at(lhs, p), sigma) == target) {
                hit = p;
                break;
            }
        }
        if (hit) {
            for (int j = 0; j < lvl; ++j) emit(q, sys.rule8(i, 1));
            emit(q, sys.rule8(i, static_cast<int>(hit->ix[0])));
            for (size_t k = 1; k < hit->ix.size(); ++k)
                emit(q, sys.rule8(g_index_at(q), static_cast<int>(hit->ix[k])));
        } else {
            if (is_var(u))
                throw SimulationFailed("unbound variable in the right-hand side claim");
            int du = static_cast<int>(u->depth);
            for (int j = 0; j < lvl - du; ++j) emit(q, sys.rule8(i, 1));
            int n = static_cast<int>(u->args.size());
            if (du == 0) {
                for (int j = 1; j <= sys.params.max_arity; ++j)
                    collapse(q.child(static_cast<uint32_t>(j + 1)));
            } else {
                for (int j = 1; j <= n; ++j)
                    claim_realize(q.child(static_cast<uint32_t>(j + 1)),
                                  u->args[static_cast<size_t>(j - 1)], du - 1, lhs, sigma, i);
                for (int j = n + 1; j <= sys.params.max_arity; ++j)
                    collapse(q.child(static_cast<uint32_t>(j + 1)));
            }
            head_fix(q, oracle.sccheight(target), target);
        }
        if (at(q) != tr(target))
            throw SimulationFailed("claim did not reach the encoded instance of " +
                                   term_to_string(target));
    }

    static Position tr_position(const Position& p) {
        Position q;
        for (uint32_t ix : p.ix) q.ix.push_back(ix + 1);
        return q;
    }

    Derivation simulate_step(const RewriteStep& step) {
        if (!is_ground(step.source))
            throw BadParams("simulate_step: derivation must be ground");
        if (!validate_step(base, step)) throw BadParams("simulate_step: invalid input step");
        steps.clear();
        current = tr(step.source);
        Term start = current;
        Position q = tr_position(step.redex);
        const Rule& rule = base.rules[static_cast<size_t>(step.rule_index)];
        SccHeight sh = oracle.sccheight(subterm_at(step.source, step.redex));
        if (sh.height < 1)
            throw SimulationFailed("redex with measure " + sh.str());
        emit(q, sys.rule1(static_cast<int>(sh.rank)));
        claim_realize(q, rule.rhs, sys.params.branching, rule.lhs, step.subst,
                      static_cast<int>(sh.rank));
        // adjust the heads along the path above the redex, deepest first
        for (int len = static_cast<int>(step.redex.ix.size()) - 1; len >= 0; --len) {
            Position pp(std::vector<uint32_t>(step.redex.ix.begin(), step.redex.ix.begin() + len));
            SccHeight oldh = oracle.sccheight(subterm_at(step.source, pp));
            SccHeight newh = oracle.sccheight(subterm_at(step.target, pp));
            if (oldh == newh) continue;
            head_fix(tr_position(pp), newh, subterm_at(step.target, pp));
        }
        if (current != tr(step.target))
            throw SimulationFailed("witness did not reach the encoding of the step target");
        Derivation out{start, steps};
        if (out.steps.empty()) throw SimulationFailed("empty witness");
        if (!validate_derivation(sys.rules, out)) throw SimulationFailed("witness revalidation failed");
        return out;
    }

    // current at q: g^du(z) ->+ c
    void collapse_seed_slot(const Position& q, int du) {
        emit(q, du == 0 ? sys.rule10() : sys.rule9());
        collapse(q);
    }

    void seed_rec(const Position& q, Term t, int lvl) {
        int k = sys.params.scc_count;
        int dt = static_cast<int>(t->depth);
        for (int j = lvl; j > dt; --j) {
            emit(q, sys.rule9());
            emit(q, sys.rule8(k, 1));
        }
        SccHeight sh = oracle.sccheight(t);
        if (dt == 0) {
            emit(q, sys.rule10());
        } else {
            emit(q, sys.rule9());
            int n = static_cast<int>(t->args.size());
            for (int j = 1; j <= n; ++j)
                seed_rec(q.child(static_cast<uint32_t>(j + 1)),
                         t->args[static_cast<size_t>(j - 1)], dt - 1);
            for (int j = n + 1; j <= sys.params.max_arity; ++j)
                collapse_seed_slot(q.child(static_cast<uint32_t>(j + 1)), dt - 1);
        }
        if (static_cast<int>(sh.rank) < k) {
            for (int idx = k; idx > static_cast<int>(sh.rank); --idx) emit(q, sys.rule2(idx));
        } else if (dt > 0) {
            // no index step available: the counter keeps its copies, so fix them
            Position inner = q.child(1).child(1).child(1);
            int n = static_cast<int>(t->args.size());
            for (int j = 1; j <= n; ++j)
                seed_rec(inner.child(static_cast<uint32_t>(j + 1)),
                         t->args[static_cast<size_t>(j - 1)], dt - 1);
            for (int j = n + 1; j <= sys.params.max_arity; ++j)
                collapse_seed_slot(inner.child(static_cast<uint32_t>(j + 1)), dt - 1);
        }
        size_resolve(q.child(1).child(1), t);
        long long F = f_normalize(q.child(1));
        if (F < sh.height)
            throw SimulationFailed("f value below the measure while seeding " + term_to_string(t));
        for (long long j = sh.height; j < F; ++j) decrement(q);
        if (at(q) != tr(t))
            throw SimulationFailed("seed construction missed the encoding of " +
                                   term_to_string(t));
    }

    Derivation seed(Term t) {
        if (!is_ground(t)) throw BadParams("seed_term_derivation: term must be ground");
        steps.clear();
        Term start = make_fun(sys.z_name);
        for (uint32_t i = 0; i < t->depth; ++i) start = make_fun(sys.g_name, {start});
        current = start;
        seed_rec(Position{}, t, static_cast<int>(t->depth));
        if (current != tr(t)) throw SimulationFailed("seed did not reach the encoding");
        Derivation out{start, steps};
        if (!validate_derivation(sys.rules, out)) throw SimulationFailed("seed revalidation failed");
        return out;
    }
};

Simulator::Simulator(const Trs& base, SimParams params, size_t budget)
    : impl_(new Impl(base, std::move(params), budget)) {}
Simulator::~Simulator() = default;
const SimSystem& Simulator::system() const { return impl_->sys; }
const DpProblem& Simulator::dp() const { return impl_->dp; }
const DependencyGraph& Simulator::dg() const { return impl_->dg; }
SccHeight Simulator::sccheight(Term t) { return impl_->oracle.sccheight(t); }
Term Simulator::tr(Term t) { return impl_->tr(t); }
Derivation Simulator::simulate_step(const RewriteStep& step) { return impl_->simulate_step(step); }

std::vector<Derivation> Simulator::simulate_derivation(const Derivation& d) {
    std::vector<Derivation> out;
    for (const RewriteStep& step : d.steps) out.push_back(impl_->simulate_step(step));
    return out;
}

Derivation Simulator::seed_term_derivation(Term t) { return impl_->seed(t); }

// ---------------------------------------------------------------------------
// fast functions
// ---------------------------------------------------------------------------

namespace {

constexpr size_t kFastBitCap = 1u << 22;
constexpr long long kFastIterCap = 1 << 20;

BigNat fast_rec(int d, int n, const BigNat& m) {
    if (n == 0) {
        BigNat exp = m + 1;
        // d^(m+1) needs about (m+1)*log2(d) bits
        if (exp * 2 > static_cast<long long>(kFastBitCap))
            throw ArgumentTooLarge("fast_function: value exceeds the evaluability cap");
        return bignat_pow(BigNat(d), exp.convert_to<unsigned long long>());
    }
    if (m + 1 > kFastIterCap)
        throw ArgumentTooLarge("fast_function: iteration count exceeds the evaluability cap");
    long long iters = (m + 1).convert_to<long long>();
    BigNat x = m;
    for (long long i = 0; i < iters; ++i) {
        x = fast_rec(d, n - 1, x);
        if (bit_length(x) > kFastBitCap)
            throw ArgumentTooLarge("fast_function: value exceeds the evaluability cap");
    }
    return x;
}

}  // namespace

BigNat fast_function(int dparam, int n, const BigNat& m) {
    if (dparam < 2) throw BadParams("fast_function: the base parameter must be at least 2");
    if (n > 2 || m > 6 || dparam > 4)
        throw ArgumentTooLarge("fast_function: guarded to n <= 2, m <= 6, d <= 4");
    if (n < 0 || m < 0) throw BadParams("fast_function: negative arguments");
    return fast_rec(dparam, n, m);
}

}  // namespace dpclab
