#include "dpclab/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dpclab/parse.hpp"

namespace dpclab {

namespace {

void reducts_rec(const Trs& trs, Term whole, Term sub, Position& pos,
                 std::vector<RewriteStep>& out) {
    if (!sub->var) {
        auto it = trs.rules_by_root.find(sub->sym);
        if (it != trs.rules_by_root.end()) {
            for (int ri : it->second) {
                const Rule& rule = trs.rules[static_cast<size_t>(ri)];
                if (auto sigma = match(rule.lhs, sub)) {
                    Term replacement = apply_subst(rule.rhs, *sigma);
                    Term target = replace_at(whole, pos, replacement);
                    out.push_back(RewriteStep{whole, pos, ri, std::move(*sigma), target});
                }
            }
        }
    }
    for (uint32_t i = 0; i < sub->args.size(); ++i) {
        pos.ix.push_back(i + 1);
        reducts_rec(trs, whole, sub->args[i], pos, out);
        pos.ix.pop_back();
    }
}

}  // namespace

std::vector<RewriteStep> one_step_reducts(const Trs& trs, Term t) {
    std::vector<RewriteStep> out;
    Position pos;
    reducts_rec(trs, t, t, pos, out);
    return out;
}

std::optional<RewriteStep> step_at(const Trs& trs, Term t, const Position& p, int rule_index) {
    if (rule_index < 0 || rule_index >= static_cast<int>(trs.rules.size())) return std::nullopt;
    if (!valid_position(t, p)) return std::nullopt;
    const Rule& rule = trs.rules[static_cast<size_t>(rule_index)];
    Term sub = subterm_at(t, p);
    auto sigma = match(rule.lhs, sub);
    if (!sigma) return std::nullopt;
    Term target = replace_at(t, p, apply_subst(rule.rhs, *sigma));
    return RewriteStep{t, p, rule_index, std::move(*sigma), target};
}

bool validate_step(const Trs& trs, const RewriteStep& step) {
    if (step.rule_index < 0 || step.rule_index >= static_cast<int>(trs.rules.size()))
        return false;
    if (!valid_position(step.source, step.redex)) return false;
    const Rule& rule = trs.rules[static_cast<size_t>(step.rule_index)];
    if (apply_subst(rule.lhs, step.subst) != subterm_at(step.source, step.redex)) return false;
    Term target = replace_at(step.source, step.redex, apply_subst(rule.rhs, step.subst));
    return target == step.target;
}

bool validate_derivation(const Trs& trs, const Derivation& d) {
    Term cur = d.initial;
    for (const RewriteStep& s : d.steps) {
        if (s.source != cur || !validate_step(trs, s)) return false;
        cur = s.target;
    }
    return true;
}

bool is_normal_form(const Trs& trs, Term t) {
    if (!t->var) {
        auto it = trs.rules_by_root.find(t->sym);
        if (it != trs.rules_by_root.end())
            for (int ri : it->second)
                if (match(trs.rules[static_cast<size_t>(ri)].lhs, t)) return false;
    }
    for (Term a : t->args)
        if (!is_normal_form(trs, a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// plain heights
// ---------------------------------------------------------------------------

namespace {
enum class Color : uint8_t { Gray, Black };
}

struct HeightEngine::Impl {
    const Trs& trs;
    std::unordered_map<Term, long long> memo;

    explicit Impl(const Trs& t) : trs(t) {}

    long long run(Term start, size_t budget) {
        if (auto it = memo.find(start); it != memo.end()) return it->second;
        struct Frame {
            Term t;
            std::vector<Term> succs;
            size_t next = 0;
            long long best = 0;
        };
        std::unordered_map<Term, Color> color;
        std::vector<Frame> stack;
        size_t fresh = 0;
        auto push = [&](Term t) {
            if (++fresh > budget) throw BudgetExceeded("derivation_height: budget exceeded");
            color[t] = Color::Gray;
            Frame f;
            f.t = t;
            for (const RewriteStep& s : one_step_reducts(trs, t)) f.succs.push_back(s.target);
            stack.push_back(std::move(f));
        };
        push(start);
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == f.succs.size()) {
                memo[f.t] = f.best;
                color[f.t] = Color::Black;
                long long val = f.best;
                stack.pop_back();
                if (!stack.empty())
                    stack.back().best = std::max(stack.back().best, 1 + val);
                continue;
            }
            Term v = f.succs[f.next++];
            if (auto it = memo.find(v); it != memo.end()) {
                f.best = std::max(f.best, 1 + it->second);
                continue;
            }
            auto cit = color.find(v);
            if (cit != color.end() && cit->second == Color::Gray)
                throw NonTerminating("derivation_height: reachable cycle at " +
                                     term_to_string(v));
            push(v);
        }
        return memo.at(start);
    }
};

HeightEngine::HeightEngine(const Trs& trs) : impl_(new Impl(trs)) {}
HeightEngine::~HeightEngine() = default;
long long HeightEngine::height(Term t, size_t budget) { return impl_->run(t, budget); }

long long derivation_height(const Trs& trs, Term t, size_t budget) {
    if (budget == 0) throw BudgetExceeded("derivation_height: zero budget");
    HeightEngine engine(trs);
    return engine.height(t, budget);
}

namespace {

long long potential_metric(const Trs& trs, Term start, size_t budget, bool depth_metric) {
    // full reachability set with cycle detection
    struct Frame {
        Term t;
        std::vector<Term> succs;
        size_t next = 0;
    };
    std::unordered_map<Term, Color> color;
    std::vector<Frame> stack;
    long long best = 0;
    size_t fresh = 0;
    auto metric = [&](Term t) {
        return static_cast<long long>(depth_metric ? t->depth : t->size);
    };
    auto push = [&](Term t) {
        if (++fresh > budget) throw BudgetExceeded("potential depth/size: budget exceeded");
        color[t] = Color::Gray;
        best = std::max(best, metric(t));
        Frame f;
        f.t = t;
        for (const RewriteStep& s : one_step_reducts(trs, t)) f.succs.push_back(s.target);
        stack.push_back(std::move(f));
    };
    push(start);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.succs.size()) {
            color[f.t] = Color::Black;
            stack.pop_back();
            continue;
        }
        Term v = f.succs[f.next++];
        auto cit = color.find(v);
        if (cit == color.end()) {
            push(v);
        } else if (cit->second == Color::Gray) {
            throw NonTerminating("potential depth/size: reachable cycle");
        }
    }
    return best;
}

}  // namespace

long long potential_depth(const Trs& trs, Term t, size_t budget) {
    return potential_metric(trs, t, budget, true);
}

long long potential_size(const Trs& trs, Term t, size_t budget) {
    return potential_metric(trs, t, budget, false);
}

// ---------------------------------------------------------------------------
// relative heights
// ---------------------------------------------------------------------------

namespace {

struct PtrPairHash {
    size_t operator()(const std::pair<Term, Term>& p) const {
        return std::hash<const void*>()(p.first) * 1000003u ^ std::hash<const void*>()(p.second);
    }
};

// Sound over-approximation of "u can rewrite (below the strict root) into an
// instance of this pattern". Used to prune strict-dead states and to abstract
// inert subterms; both are enabled only when they provably preserve heights.
class WeakAnalysis {
  public:
    explicit WeakAnalysis(const Trs& weak) : weak_(weak) {
        // symbol-level root reachability closure over the weak rules
        bool changed = true;
        auto& reach = sym_reach_;
        for (auto& [name, arity] : weak_.signature) {
            Sym s = intern_symbol(name);
            reach[s].insert(s);
        }
        while (changed) {
            changed = false;
            for (const Rule& r : weak_.rules) {
                Sym h = root(r.lhs);
                auto& set = reach[h];
                size_t before = set.size();
                bool before_top = top_.count(h) > 0;
                if (is_var(r.rhs)) {
                    top_.insert(h);
                } else {
                    Sym g = root(r.rhs);
                    set.insert(g);
                    if (top_.count(g)) top_.insert(h);
                    auto it = reach.find(g);
                    if (it != reach.end()) set.insert(it->second.begin(), it->second.end());
                }
                if (set.size() != before || (top_.count(h) > 0) != before_top) changed = true;
            }
        }
    }

    // pattern variables match anything; errs toward true
    bool may_match(Term u, Term pattern) {
        if (is_var(pattern)) return true;
        if (is_var(u)) return false;  // frozen: variables never rewrite
        auto key = std::make_pair(u, pattern);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        memo_[key] = false;  // cycle-safe default; recursion is structural anyway
        bool res = false;
        if (u->sym == pattern->sym && u->args.size() == pattern->args.size()) {
            res = true;
            for (size_t i = 0; i < u->args.size() && res; ++i)
                res = may_match(u->args[i], pattern->args[i]);
        }
        if (!res) {
            auto it = weak_.rules_by_root.find(u->sym);
            if (it != weak_.rules_by_root.end()) {
                for (int ri : it->second) {
                    const Rule& rule = weak_.rules[static_cast<size_t>(ri)];
                    if (rule.lhs->args.size() != u->args.size()) continue;
                    bool applicable = true;
                    for (size_t i = 0; i < u->args.size() && applicable; ++i)
                        applicable = may_match(u->args[i], rule.lhs->args[i]);
                    if (!applicable) continue;
                    if (is_var(rule.rhs)) { res = true; break; }
                    Sym g = root(rule.rhs);
                    if (top_.count(g)) { res = true; break; }
                    auto rit = sym_reach_.find(g);
                    if (rit != sym_reach_.end() && rit->second.count(pattern->sym)) {
                        res = true;
                        break;
                    }
                }
            }
        }
        memo_[key] = res;
        return res;
    }

  private:
    const Trs& weak_;
    std::map<Sym, std::set<Sym>> sym_reach_;
    std::set<Sym> top_;
    std::unordered_map<std::pair<Term, Term>, bool, PtrPairHash> memo_;
};

bool occurs_below_root(Term t, const std::set<Sym>& syms) {
    for (Term a : t->args) {
        if (!is_var(a) && syms.count(a->sym)) return true;
        if (occurs_below_root(a, syms)) return true;
    }
    return false;
}

bool occurs_anywhere(Term t, const std::set<Sym>& syms) {
    if (!is_var(t) && syms.count(t->sym)) return true;
    return occurs_below_root(t, syms);
}

}  // namespace

struct RelativeHeightEngine::Impl {
    Trs strict;
    Trs weak;
    bool root_only = false;    // strict roots occur only at the root of states
    bool abstraction = false;  // inert subterms may be collapsed
    std::set<Sym> strict_roots;
    WeakAnalysis analysis;
    std::vector<Term> subpatterns;  // function-rooted lhs subpatterns, strict ∪ weak

    // persistent exploration graph; every fully processed query caches all
    // node heights in done_
    std::unordered_map<Term, int> ids;
    std::vector<Term> terms;
    std::vector<std::vector<std::pair<int, bool>>> edges;  // (to, strict?)
    std::vector<bool> expanded;
    std::unordered_map<Term, long long> done_;
    std::unordered_map<Term, Term> canon_memo_;
    std::unordered_map<Term, bool> inert_memo_;
    Term dead;

    Impl(const Trs& s, const Trs& w) : strict(s), weak(w), analysis(weak) {
        for (const Rule& r : strict.rules) strict_roots.insert(root(r.lhs));
        dead = make_fun("#dead");
        // A subterm is inert when no rule can ever inspect it: no proper
        // function-rooted subpattern of any lhs and no full strict lhs can
        // match any of its reducts. Matches of full weak lhss are allowed:
        // they only rewrite inside the subterm and carry no strict weight.
        for (const Trs* t : {&strict, &weak})
            for (const Rule& r : t->rules)
                for (const Position& p : fun_positions(r.lhs))
                    if (!p.is_root()) subpatterns.push_back(subterm_at(r.lhs, p));
        for (const Rule& r : strict.rules) subpatterns.push_back(r.lhs);
        std::sort(subpatterns.begin(), subpatterns.end());
        subpatterns.erase(std::unique(subpatterns.begin(), subpatterns.end()),
                          subpatterns.end());
    }

    bool detect_root_only(Term start) const {
        for (const Rule& r : weak.rules)
            if (occurs_anywhere(r.lhs, strict_roots) || occurs_anywhere(r.rhs, strict_roots))
                return false;
        for (const Rule& r : strict.rules) {
            if (occurs_below_root(r.lhs, strict_roots)) return false;
            if (occurs_below_root(r.rhs, strict_roots)) return false;
            if (is_var(r.rhs)) return false;  // keeps the root-position invariant simple
        }
        return !occurs_below_root(start, strict_roots);
    }

    bool inert(Term u) {
        if (auto it = inert_memo_.find(u); it != inert_memo_.end()) return it->second;
        bool res = true;
        for (Term sp : subpatterns)
            if (analysis.may_match(u, sp)) { res = false; break; }
        inert_memo_[u] = res;
        return res;
    }

    Term canon(Term u) {
        if (!abstraction) return u;
        if (auto it = canon_memo_.find(u); it != canon_memo_.end()) return it->second;
        Term res;
        if (inert(u)) {
            res = dead;
        } else if (u->args.empty()) {
            res = u;
        } else {
            std::vector<Term> args;
            args.reserve(u->args.size());
            for (Term a : u->args) args.push_back(canon(a));
            res = make_fun(u->sym, std::move(args));
        }
        canon_memo_[u] = res;
        return res;
    }

    bool live(Term u) {
        if (!root_only) return true;
        if (is_var(u) || !strict_roots.count(u->sym)) return false;
        for (const Rule& r : strict.rules) {
            if (root(r.lhs) != u->sym || r.lhs->args.size() != u->args.size()) continue;
            bool ok = true;
            for (size_t i = 0; i < u->args.size() && ok; ++i)
                ok = analysis.may_match(u->args[i], r.lhs->args[i]);
            if (ok) return true;
        }
        return false;
    }

    int node(Term t, size_t budget, size_t& fresh) {
        auto it = ids.find(t);
        if (it != ids.end()) return it->second;
        if (++fresh > budget)
            throw BudgetExceeded("relative_derivation_height: budget exceeded");
        int id = static_cast<int>(terms.size());
        ids.emplace(t, id);
        terms.push_back(t);
        edges.emplace_back();
        expanded.push_back(false);
        return id;
    }

    void explore(Term start, size_t budget) {
        size_t fresh = 0;
        std::vector<int> work{node(start, budget, fresh)};
        while (!work.empty()) {
            int id = work.back();
            work.pop_back();
            if (expanded[static_cast<size_t>(id)]) continue;
            expanded[static_cast<size_t>(id)] = true;
            Term t = terms[static_cast<size_t>(id)];
            if (!live(t)) continue;  // no strict step ever reachable: height 0
            for (const RewriteStep& s : one_step_reducts(strict, t)) {
                int v = node(canon(s.target), budget, fresh);
                edges[static_cast<size_t>(id)].emplace_back(v, true);
                if (!expanded[static_cast<size_t>(v)]) work.push_back(v);
            }
            for (const RewriteStep& s : one_step_reducts(weak, t)) {
                int v = node(canon(s.target), budget, fresh);
                edges[static_cast<size_t>(id)].emplace_back(v, false);
                if (!expanded[static_cast<size_t>(v)]) work.push_back(v);
            }
        }
    }

    // iterative Tarjan + condensation longest path; fills done_ for all nodes
    void evaluate() {
        int n = static_cast<int>(terms.size());
        std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
        std::vector<int> scc_of(static_cast<size_t>(n), -1);
        std::vector<bool> on_stack(static_cast<size_t>(n), false);
        std::vector<int> stack;
        std::vector<std::vector<int>> sccs;
        int counter = 0;
        struct TFrame { int v; size_t ei; };
        for (int s = 0; s < n; ++s) {
            if (index[static_cast<size_t>(s)] != -1) continue;
            std::vector<TFrame> call{{s, 0}};
            index[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = counter++;
            stack.push_back(s);
            on_stack[static_cast<size_t>(s)] = true;
            while (!call.empty()) {
                TFrame& f = call.back();
                auto& es = edges[static_cast<size_t>(f.v)];
                if (f.ei < es.size()) {
                    int w = es[f.ei++].first;
                    if (index[static_cast<size_t>(w)] == -1) {
                        index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                        stack.push_back(w);
                        on_stack[static_cast<size_t>(w)] = true;
                        call.push_back({w, 0});
                    } else if (on_stack[static_cast<size_t>(w)]) {
                        low[static_cast<size_t>(f.v)] =
                            std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
                    }
                } else {
                    int v = f.v;
                    call.pop_back();
                    if (!call.empty())
                        low[static_cast<size_t>(call.back().v)] =
                            std::min(low[static_cast<size_t>(call.back().v)],
                                     low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                        sccs.emplace_back();
                        while (true) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[static_cast<size_t>(w)] = false;
                            scc_of[static_cast<size_t>(w)] = static_cast<int>(sccs.size()) - 1;
                            sccs.back().push_back(w);
                            if (w == v) break;
                        }
                    }
                }
            }
        }
        // strict edge inside an SCC (incl. self loops) = strict step on a cycle
        for (int v = 0; v < n; ++v)
            for (auto& [w, is_strict] : edges[static_cast<size_t>(v)])
                if (is_strict &&
                    scc_of[static_cast<size_t>(v)] == scc_of[static_cast<size_t>(w)])
                    throw NonTerminatingRelative(
                        "relative_derivation_height: strict step on a reachable cycle");
        // Tarjan emits SCCs in reverse topological order: successors first
        std::vector<long long> scc_height(sccs.size(), 0);
        for (size_t c = 0; c < sccs.size(); ++c) {
            long long best = 0;
            for (int v : sccs[c])
                for (auto& [w, is_strict] : edges[static_cast<size_t>(v)]) {
                    size_t cw = static_cast<size_t>(scc_of[static_cast<size_t>(w)]);
                    if (cw == c) continue;  // weak-only internal edge, contracted
                    best = std::max(best, (is_strict ? 1 : 0) + scc_height[cw]);
                }
            scc_height[c] = best;
        }
        for (int v = 0; v < n; ++v)
            done_[terms[static_cast<size_t>(v)]] =
                scc_height[static_cast<size_t>(scc_of[static_cast<size_t>(v)])];
    }

    bool configured = false;

    long long run(Term start, size_t budget) {
        if (!configured) {
            root_only = detect_root_only(start);
            abstraction = root_only && strict.left_linear && weak.left_linear;
            configured = true;
        }
        // conservatively recheck the start-term side of the root-only invariant
        if (root_only && occurs_below_root(start, strict_roots)) {
            root_only = false;
            abstraction = false;
            ids.clear(); terms.clear(); edges.clear(); expanded.clear();
            done_.clear(); canon_memo_.clear();
        }
        Term s = canon(start);
        if (auto it = done_.find(s); it != done_.end()) return it->second;
        try {
            explore(s, budget);
            evaluate();
        } catch (...) {
            // drop the partial graph so stale unexpanded nodes cannot leak
            // wrong heights into later queries
            ids.clear();
            terms.clear();
            edges.clear();
            expanded.clear();
            throw;
        }
        return done_.at(s);
    }
};

RelativeHeightEngine::RelativeHeightEngine(const Trs& strict, const Trs& weak)
    : impl_(new Impl(strict, weak)) {}
RelativeHeightEngine::~RelativeHeightEngine() = default;
long long RelativeHeightEngine::height(Term t, size_t budget) { return impl_->run(t, budget); }

long long relative_derivation_height(const Trs& strict, const Trs& weak, Term t, size_t budget) {
    RelativeHeightEngine engine(strict, weak);
    return engine.height(t, budget);
}

// ---------------------------------------------------------------------------
// strategies, random generation, traces
// ---------------------------------------------------------------------------

Derivation derive(const Trs& trs, Term t, Strategy strategy, size_t max_steps) {
    Derivation d{t, {}};
    Term cur = t;
    for (size_t i = 0; i < max_steps; ++i) {
        std::vector<RewriteStep> steps = one_step_reducts(trs, cur);
        if (steps.empty()) break;
        std::vector<Position> redexes;
        for (const RewriteStep& s : steps) redexes.push_back(s.redex);
        const RewriteStep* chosen = nullptr;
        for (const RewriteStep& s : steps) {
            bool ok = true;
            for (const Position& q : redexes) {
                if (strategy == Strategy::LeftmostInnermost ? is_strict_prefix(s.redex, q)
                                                            : is_strict_prefix(q, s.redex)) {
                    ok = false;
                    break;
                }
            }
            if (ok) { chosen = &s; break; }
        }
        d.steps.push_back(*chosen);
        cur = chosen->target;
    }
    return d;
}

Term random_ground_term(const std::map<std::string, int>& signature, int max_size,
                        std::mt19937_64& rng) {
    std::map<std::string, int> sig = signature;
    bool has_constant = false;
    for (auto& [name, arity] : sig)
        if (arity == 0) has_constant = true;
    if (!has_constant) sig.emplace("⋄", 0);
    std::vector<std::pair<std::string, int>> symbols(sig.begin(), sig.end());

    int target = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(max_size, 1)));
    auto build = [&](auto&& self, int budget) -> Term {
        std::vector<size_t> fits;
        for (size_t i = 0; i < symbols.size(); ++i)
            if (1 + symbols[i].second <= budget) fits.push_back(i);
        if (fits.empty()) {
            for (size_t i = 0; i < symbols.size(); ++i)
                if (symbols[i].second == 0) fits.push_back(i);
        }
        auto& [name, arity] = symbols[fits[rng() % fits.size()]];
        if (arity == 0) return make_fun(name);
        std::vector<Term> args;
        int remaining = budget - 1;
        for (int k = 0; k < arity; ++k) {
            int slots_left = arity - k - 1;
            int avail = remaining - slots_left;
            int sz = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(avail, 1)));
            args.push_back(self(self, sz));
            remaining -= static_cast<int>(args.back()->size);
        }
        return make_fun(name, std::move(args));
    };
    return build(build, target);
}

Derivation random_derivation(const Trs& trs, Term start, int max_steps, std::mt19937_64& rng) {
    Derivation d{start, {}};
    Term cur = start;
    for (int i = 0; i < max_steps; ++i) {
        std::vector<RewriteStep> steps = one_step_reducts(trs, cur);
        if (steps.empty()) break;
        const RewriteStep& s = steps[rng() % steps.size()];
        d.steps.push_back(s);
        cur = s.target;
    }
    return d;
}

Derivation parse_trace(std::string_view text, const Trs& trs) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    auto trimmed = [](const std::string& s) {
        size_t a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    };
    std::optional<Derivation> d;
    Term cur = nullptr;
    std::optional<std::pair<Position, int>> pending;
    for (const std::string& raw : lines) {
        std::string line = trimmed(raw);
        if (line.empty()) continue;
        if (line[0] == '@') {
            std::istringstream in(line);
            std::string postok, ruletok;
            in >> postok >> ruletok;
            if (ruletok.empty() || ruletok[0] != '#')
                throw SyntaxError("trace: expected \"@<pos> #<rule>\", got: " + line);
            Position p = Position::parse(postok.substr(1));
            int ri = std::stoi(ruletok.substr(1));
            if (pending) throw SyntaxError("trace: two step annotations in a row");
            if (!cur) throw SyntaxError("trace: step annotation before initial term");
            pending = std::make_pair(p, ri);
        } else {
            Term t = parse_term(line);
            if (!d) {
                d = Derivation{t, {}};
                cur = t;
            } else {
                if (!pending) throw SyntaxError("trace: missing step annotation before term");
                auto step = step_at(trs, cur, pending->first, pending->second);
                if (!step || step->target != t)
                    throw SyntaxError("trace: step @" + pending->first.str() + " #" +
                                      std::to_string(pending->second) + " does not replay to " +
                                      term_to_string(t));
                d->steps.push_back(*step);
                cur = t;
                pending.reset();
            }
        }
    }
    if (!d) throw SyntaxError("trace: empty file");
    if (pending) throw SyntaxError("trace: dangling step annotation");
    return *d;
}

std::string print_trace(const Derivation& d) {
    std::string out = term_to_string(d.initial) + "\n";
    for (const RewriteStep& s : d.steps) {
        out += "@" + s.redex.str() + " #" + std::to_string(s.rule_index) + "\n";
        out += term_to_string(s.target) + "\n";
    }
    return out;
}

}  // namespace dpclab
