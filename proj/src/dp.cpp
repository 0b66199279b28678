#include "dpclab/dp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace dpclab {

std::string marked_name(const std::string& name) { return name + "#"; }

Term mark_root(Term t) {
    if (is_var(t)) return t;
    return make_fun(marked_name(symbol_name(t->sym)), t->args);
}

Trs DpProblem::pairs_trs() const {
    return make_trs(pairs);
}

Trs DpProblem::pairs_trs(const std::vector<int>& indices) const {
    std::vector<Rule> subset;
    for (int i : indices) subset.push_back(pairs[static_cast<size_t>(i)]);
    return make_trs(std::move(subset));
}

DpProblem dependency_pairs(const Trs& trs) {
    DpProblem dp;
    dp.base = trs;
    dp.marked_signature = trs.signature;
    for (auto& [name, arity] : trs.signature)
        dp.marked_signature.emplace(marked_name(name), arity);
    for (const Rule& rule : trs.rules) {
        for (const Position& p : positions(rule.rhs)) {
            Term u = subterm_at(rule.rhs, p);
            if (is_var(u) || !trs.is_defined(u->sym)) continue;
            if (has_proper_subterm(rule.lhs, u)) continue;
            dp.pairs.push_back(Rule{mark_root(rule.lhs), mark_root(u)});
        }
    }
    return dp;
}

// ---------------------------------------------------------------------------
// argument filtering
// ---------------------------------------------------------------------------

Term apply_filtering(const ArgumentFiltering& af, Term t) {
    if (is_var(t)) return t;
    auto it = af.pi.find(symbol_name(t->sym));
    if (it == af.pi.end())
        throw MissingFilterEntry("no filtering entry for symbol '" + symbol_name(t->sym) + "'");
    int arity = static_cast<int>(t->args.size());
    if (const int* idx = std::get_if<int>(&it->second)) {
        if (*idx < 1 || *idx > arity)
            throw MissingFilterEntry("filtering index out of range for '" +
                                     symbol_name(t->sym) + "'");
        return apply_filtering(af, t->args[static_cast<size_t>(*idx - 1)]);
    }
    const auto& keep = std::get<std::vector<int>>(it->second);
    std::vector<Term> args;
    int prev = 0;
    for (int idx : keep) {
        if (idx <= prev || idx > arity)
            throw MissingFilterEntry("filtering list not strictly increasing within arity for '" +
                                     symbol_name(t->sym) + "'");
        prev = idx;
        args.push_back(apply_filtering(af, t->args[static_cast<size_t>(idx - 1)]));
    }
    return make_fun(t->sym, std::move(args));
}

Rule apply_filtering(const ArgumentFiltering& af, const Rule& r) {
    return Rule{apply_filtering(af, r.lhs), apply_filtering(af, r.rhs)};
}

Trs apply_filtering(const ArgumentFiltering& af, const Trs& trs) {
    std::vector<Rule> rules;
    for (const Rule& r : trs.rules) rules.push_back(apply_filtering(af, r));
    return make_trs(std::move(rules));
}

DpProblem apply_filtering(const ArgumentFiltering& af, const DpProblem& dp) {
    DpProblem out;
    out.base = apply_filtering(af, dp.base);
    for (const Rule& p : dp.pairs) out.pairs.push_back(apply_filtering(af, p));
    out.marked_signature = out.base.signature;
    for (const Rule& p : out.pairs) {
        collect_function_symbols(p.lhs, out.marked_signature);
        collect_function_symbols(p.rhs, out.marked_signature);
    }
    return out;
}

// ---------------------------------------------------------------------------
// unification and the estimated dependency graph
// ---------------------------------------------------------------------------

namespace {

bool occurs(Sym v, Term t) {
    if (is_var(t)) return t->sym == v;
    for (Term a : t->args)
        if (occurs(v, a)) return true;
    return false;
}

bool unify_rec(Term a, Term b, Substitution& sigma) {
    a = apply_subst(a, sigma);
    b = apply_subst(b, sigma);
    if (a == b) return true;
    if (is_var(a) || is_var(b)) {
        if (!is_var(a)) std::swap(a, b);
        if (occurs(a->sym, b)) return false;
        Substitution bind{{a->sym, b}};
        for (auto& [v, t] : sigma) t = apply_subst(t, bind);
        sigma[a->sym] = b;
        return true;
    }
    if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!unify_rec(a->args[i], b->args[i], sigma)) return false;
    return true;
}

Term rename_vars(Term t, const std::string& suffix) {
    if (is_var(t)) return make_var(symbol_name(t->sym) + suffix);
    std::vector<Term> args;
    args.reserve(t->args.size());
    for (Term a : t->args) args.push_back(rename_vars(a, suffix));
    return make_fun(t->sym, std::move(args));
}

// CAP: replace defined-rooted proper subterms (outermost) by fresh variables
Term cap(Term t, const Trs& base, int& counter) {
    std::vector<Term> args;
    args.reserve(t->args.size());
    std::function<Term(Term)> rec = [&](Term u) -> Term {
        if (!is_var(u) && base.is_defined(u->sym))
            return make_var("#c" + std::to_string(++counter));
        if (is_var(u) || u->args.empty()) return u;
        std::vector<Term> as;
        as.reserve(u->args.size());
        for (Term a : u->args) as.push_back(rec(a));
        return make_fun(u->sym, std::move(as));
    };
    for (Term a : t->args) args.push_back(rec(a));
    return is_var(t) ? t : make_fun(t->sym, std::move(args));
}

// REN: every variable occurrence becomes a fresh variable
Term ren(Term t, int& counter) {
    if (is_var(t)) return make_var("#r" + std::to_string(++counter));
    std::vector<Term> args;
    args.reserve(t->args.size());
    for (Term a : t->args) args.push_back(ren(a, counter));
    return make_fun(t->sym, std::move(args));
}

}  // namespace

std::optional<Substitution> unify(Term a, Term b) {
    Substitution sigma;
    if (unify_rec(a, b, sigma)) return sigma;
    return std::nullopt;
}

DependencyGraph estimated_dependency_graph(const DpProblem& dp) {
    DependencyGraph dg;
    int n = static_cast<int>(dp.pairs.size());
    dg.node_count = n;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int counter = 0;
        Term capped = cap(dp.pairs[static_cast<size_t>(i)].rhs, dp.base, counter);
        Term lhs_pattern = ren(capped, counter);
        for (int j = 0; j < n; ++j) {
            Term target = rename_vars(dp.pairs[static_cast<size_t>(j)].lhs, "#u");
            if (unify(lhs_pattern, target)) {
                dg.edges.emplace_back(i, j);
                adj[static_cast<size_t>(i)].push_back(j);
            }
        }
    }

    // Tarjan SCC (pair graphs are tiny)
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<size_t>(v)] = true;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (index[static_cast<size_t>(w)] == -1) {
                strongconnect(w);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
            } else if (on_stack[static_cast<size_t>(w)]) {
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
        }
        if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
            comps.emplace_back();
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<size_t>(w)] = false;
                comps.back().push_back(w);
                if (w == v) break;
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[static_cast<size_t>(v)] == -1) strongconnect(v);

    // enumeration order: by smallest member pair index
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end());

    dg.scc_of.assign(static_cast<size_t>(n), -1);
    std::set<std::pair<int, int>> edge_set(dg.edges.begin(), dg.edges.end());
    for (size_t c = 0; c < comps.size(); ++c) {
        for (int v : comps[c]) dg.scc_of[static_cast<size_t>(v)] = static_cast<int>(c);
        bool trivial =
            comps[c].size() == 1 && !edge_set.count({comps[c][0], comps[c][0]});
        dg.sccs.push_back(SccInfo{comps[c], trivial, 0});
    }

    // rank: rk'(P) = 1 + max({0} ∪ {rk'(Q) | Q reachable from P}); ties among
    // equal rk' broken by the enumeration index; ranks are the 1-based
    // positions in the resulting order
    int k = static_cast<int>(comps.size());
    std::vector<std::set<int>> scc_succ(static_cast<size_t>(k));
    for (auto& [i, j] : dg.edges) {
        int ci = dg.scc_of[static_cast<size_t>(i)], cj = dg.scc_of[static_cast<size_t>(j)];
        if (ci != cj) scc_succ[static_cast<size_t>(ci)].insert(cj);
    }
    std::vector<int> rk1(static_cast<size_t>(k), -1);
    std::function<int(int)> eval_rk1 = [&](int c) -> int {
        if (rk1[static_cast<size_t>(c)] != -1) return rk1[static_cast<size_t>(c)];
        int best = 0;
        for (int d : scc_succ[static_cast<size_t>(c)]) best = std::max(best, eval_rk1(d));
        return rk1[static_cast<size_t>(c)] = 1 + best;
    };
    for (int c = 0; c < k; ++c) eval_rk1(c);
    std::vector<int> order(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) order[static_cast<size_t>(c)] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rk1[static_cast<size_t>(a)] != rk1[static_cast<size_t>(b)])
            return rk1[static_cast<size_t>(a)] < rk1[static_cast<size_t>(b)];
        return a < b;  // enumeration index
    });
    for (int pos = 0; pos < k; ++pos)
        dg.sccs[static_cast<size_t>(order[static_cast<size_t>(pos)])].rank = pos + 1;
    return dg;
}

// ---------------------------------------------------------------------------
// usable rules
// ---------------------------------------------------------------------------

UsableRulesResult usable_rules(const DpProblem& dp) {
    UsableRulesResult out;
    std::set<int> usable;
    bool changed = true;
    std::set<std::string> closure_syms;
    auto add_symbols = [&](Term t) {
        for (const Position& p : fun_positions(t))
            closure_syms.insert(symbol_name(subterm_at(t, p)->sym));
    };
    for (const Rule& p : dp.pairs) add_symbols(p.rhs);
    while (changed) {
        changed = false;
        for (int i = 0; i < static_cast<int>(dp.base.rules.size()); ++i) {
            if (usable.count(i)) continue;
            const Rule& r = dp.base.rules[static_cast<size_t>(i)];
            if (closure_syms.count(symbol_name(root(r.lhs)))) {
                usable.insert(i);
                add_symbols(r.rhs);
                changed = true;
            }
        }
    }
    out.usable.assign(usable.begin(), usable.end());
    Term x = make_var("x"), y = make_var("y");
    Term ce = make_fun("c_e#cons", {x, y});
    out.ce_first = Rule{ce, x};
    out.ce_second = Rule{ce, y};
    return out;
}

bool usable_rules_exact_check(const DpProblem& dp, const UsableRulesResult& ur, int size_cap,
                              size_t budget) {
    std::set<int> usable(ur.usable.begin(), ur.usable.end());
    std::vector<Rule> non_usable;
    for (int i = 0; i < static_cast<int>(dp.base.rules.size()); ++i)
        if (!usable.count(i)) non_usable.push_back(dp.base.rules[static_cast<size_t>(i)]);
    if (non_usable.empty()) return true;
    // variables stand for data: instantiating them over the constructor part
    // ensures any non-usable redex in the reachability set was created by
    // rewriting rather than planted by the instantiation
    std::map<std::string, int> data_signature;
    for (const std::string& c : dp.base.constructors)
        data_signature.emplace(c, dp.base.signature.at(c));
    std::vector<Term> ground = enumerate_ground_terms(data_signature, size_cap);

    for (const Rule& pair : dp.pairs) {
        std::set<Sym> vars = variables_of(pair.rhs);
        std::vector<Sym> vlist(vars.begin(), vars.end());
        // all ground assignments over the enumerated terms
        std::vector<size_t> idx(vlist.size(), 0);
        while (true) {
            Substitution sigma;
            for (size_t i = 0; i < vlist.size(); ++i) sigma[vlist[i]] = ground[idx[i]];
            Term start = apply_subst(pair.rhs, sigma);
            // reachability under the base rules
            std::unordered_set<Term> seen{start};
            std::vector<Term> work{start};
            while (!work.empty()) {
                Term t = work.back();
                work.pop_back();
                for (const Rule& nr : non_usable)
                    for (const Position& p : fun_positions(t))
                        if (match(nr.lhs, subterm_at(t, p))) return false;
                if (seen.size() > budget) break;  // inconclusive region: stop expanding
                for (const RewriteStep& s : one_step_reducts(dp.base, t))
                    if (seen.insert(s.target).second) work.push_back(s.target);
            }
            // next assignment
            size_t j = 0;
            for (; j < vlist.size(); ++j) {
                if (++idx[j] < ground.size()) break;
                idx[j] = 0;
            }
            if (j == vlist.size() || vlist.empty()) break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// exports
// ---------------------------------------------------------------------------

std::string dg_to_dot(const DpProblem& dp, const DependencyGraph& dg) {
    std::ostringstream out;
    out << "digraph edg {\n";
    for (int i = 0; i < dg.node_count; ++i)
        out << "  " << i << " [label=\"" << rule_to_string(dp.pairs[static_cast<size_t>(i)])
            << "\"];\n";
    for (auto& [i, j] : dg.edges) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string dg_to_json(const DependencyGraph& dg) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (int i = 0; i < dg.node_count; ++i) j["nodes"].push_back(i);
    j["edges"] = nlohmann::json::array();
    for (auto& [a, b] : dg.edges) j["edges"].push_back({a, b});
    j["sccs"] = nlohmann::json::array();
    for (const SccInfo& s : dg.sccs)
        j["sccs"].push_back({{"members", s.members}, {"trivial", s.trivial}, {"rank", s.rank}});
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// empirical complexity
// ---------------------------------------------------------------------------

ComplexityTable empirical_complexity(const Trs& trs, int n, ComplexityMode mode, size_t budget) {
    ComplexityTable table;
    if (n < 1) return table;
    std::vector<Term> ground = enumerate_ground_terms(trs.signature, n);

    std::unique_ptr<HeightEngine> plain;
    std::vector<std::unique_ptr<RelativeHeightEngine>> rel;
    Trs base = trs;
    DpProblem dp;
    if (mode == ComplexityMode::Dc) {
        plain = std::make_unique<HeightEngine>(base);
    } else {
        dp = dependency_pairs(trs);
        if (mode == ComplexityMode::DpComplexity) {
            rel.push_back(std::make_unique<RelativeHeightEngine>(dp.pairs_trs(), dp.base));
        } else {
            DependencyGraph dg = estimated_dependency_graph(dp);
            for (const SccInfo& scc : dg.sccs)
                rel.push_back(
                    std::make_unique<RelativeHeightEngine>(dp.pairs_trs(scc.members), dp.base));
        }
    }

    size_t gi = 0;
    long long running = (mode == ComplexityMode::SccComplexity) ? 1 : 0;
    for (int m = 1; m <= n; ++m) {
        for (; gi < ground.size() && static_cast<int>(ground[gi]->size) <= m; ++gi) {
            Term t = ground[gi];
            if (mode == ComplexityMode::Dc) {
                running = std::max(running, plain->height(t, budget));
            } else {
                Term marked = mark_root(t);
                for (auto& engine : rel)
                    running = std::max(running, engine->height(marked, budget));
            }
        }
        table.rows.emplace_back(m, running);
    }
    return table;
}

}  // namespace dpclab
