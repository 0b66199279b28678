#include "dpclab/progeny.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dpclab {

namespace {

// positions q of r with r|q equal to the given subterm of l
std::vector<Position> positions_of_subterm(Term r, Term sub) {
    std::vector<Position> out;
    for (const Position& q : positions(r))
        if (subterm_at(r, q) == sub) out.push_back(q);
    return out;
}

std::set<Position> step_progenies(const Trs& trs, const RewriteStep& step, const Position& p,
                                  bool descendants_only) {
    if (!valid_position(step.source, p))
        throw PositionOutOfRange("progenies_of_step: position " + p.str() + " not in source");
    const Rule& rule = trs.rules[static_cast<size_t>(step.rule_index)];
    const Position& rp = step.redex;
    std::set<Position> out;
    if (is_strict_prefix(p, rp) || is_parallel(p, rp)) {
        out.insert(p);
        return out;
    }
    Position rest = strip_prefix(rp, p);
    if (rest.is_root()) {
        // p = redex
        if (descendants_only) return out;
        for (const Position& q1 : fun_positions(rule.rhs)) {
            Term u = subterm_at(rule.rhs, q1);
            if (has_proper_subterm(rule.lhs, u)) continue;
            out.insert(p.concat(q1));
        }
        return out;
    }
    // walk l along rest; stop if we hit a variable position of l
    Term lsub = rule.lhs;
    size_t k = 0;
    while (k < rest.ix.size() && !is_var(lsub)) {
        lsub = lsub->args[rest.ix[k] - 1];
        ++k;
    }
    if (is_var(lsub)) {
        // p = rp·q1·q2 with q1 in VPos(l)
        Position q2(std::vector<uint32_t>(rest.ix.begin() + static_cast<long>(k),
                                          rest.ix.end()));
        for (const Position& q3 : positions_of_subterm(rule.rhs, lsub))
            out.insert(rp.concat(q3).concat(q2));
        return out;
    }
    // p = rp·q1 with q1 in FPos(l) \ {ε}
    if (descendants_only) return out;
    for (const Position& q2 : positions_of_subterm(rule.rhs, lsub)) out.insert(rp.concat(q2));
    return out;
}

}  // namespace

std::set<Position> progenies_of_step(const Trs& trs, const RewriteStep& step,
                                     const Position& p) {
    return step_progenies(trs, step, p, false);
}

std::set<Position> descendants_of_step(const Trs& trs, const RewriteStep& step,
                                       const Position& p) {
    return step_progenies(trs, step, p, true);
}

std::set<Position> progenitors_of_step(const Trs& trs, const RewriteStep& step,
                                       const Position& q) {
    if (!valid_position(step.target, q))
        throw PositionOutOfRange("progenitors_of_step: position " + q.str() + " not in target");
    std::set<Position> out;
    for (const Position& p : positions(step.source))
        if (progenies_of_step(trs, step, p).count(q)) out.insert(p);
    return out;
}

std::set<Position> progenies_of_derivation(const Trs& trs, const Derivation& d,
                                           const Position& p) {
    if (!valid_position(d.initial, p))
        throw PositionOutOfRange("progenies_of_derivation: position not in initial term");
    std::set<Position> cur{p};
    for (const RewriteStep& step : d.steps) {
        std::set<Position> next;
        for (const Position& q : cur) {
            std::set<Position> ps = progenies_of_step(trs, step, q);
            next.insert(ps.begin(), ps.end());
        }
        cur = std::move(next);
    }
    return cur;
}

std::set<Position> progenitors_of_derivation(const Trs& trs, const Derivation& d,
                                             const Position& q) {
    if (!valid_position(d.final_term(), q))
        throw PositionOutOfRange("progenitors_of_derivation: position not in final term");
    std::set<Position> cur{q};
    for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) {
        std::set<Position> prev;
        for (const Position& r : cur) {
            std::set<Position> ps = progenitors_of_step(trs, *it, r);
            prev.insert(ps.begin(), ps.end());
        }
        cur = std::move(prev);
    }
    return cur;
}

DerivationAnalysis analyze(const Trs& trs, const Derivation& d) {
    DerivationAnalysis a;
    a.trs = &trs;
    a.derivation = d;
    size_t n_steps = d.steps.size();
    a.child.resize(n_steps);
    a.anc.resize(n_steps);
    for (size_t i = 0; i < n_steps; ++i) {
        const RewriteStep& step = d.steps[i];
        for (const Position& p : positions(step.source)) {
            std::set<Position> ps = progenies_of_step(trs, step, p);
            a.child[i][p] = std::vector<Position>(ps.begin(), ps.end());
            for (const Position& q : ps) a.anc[i][q].push_back(p);
        }
        for (auto& [q, v] : a.anc[i]) std::sort(v.begin(), v.end());
    }

    // main branches, backward
    int n = d.term_count();
    a.main_branch.resize(static_cast<size_t>(n));
    {
        std::vector<Branch> bs = branches_of(d.term(n));
        size_t best = 0;
        for (const Branch& b : bs) best = std::max(best, b.size());
        for (const Branch& b : bs)
            if (b.size() == best) {
                a.main_branch[static_cast<size_t>(n - 1)] = b;
                break;
            }
    }
    for (int i = n - 1; i >= 1; --i) {
        const Branch& next = a.main_branch[static_cast<size_t>(i)];
        std::vector<Branch> bs = branches_of(d.term(i));
        bool found = false;
        for (const Branch& b : bs) {
            std::set<Position> bset(b.begin(), b.end());
            bool ok = true;
            for (const Position& q : next) {
                auto it = a.anc[static_cast<size_t>(i - 1)].find(q);
                bool hit = false;
                if (it != a.anc[static_cast<size_t>(i - 1)].end())
                    for (const Position& p : it->second)
                        if (bset.count(p)) { hit = true; break; }
                if (!hit) { ok = false; break; }
            }
            if (ok) {
                a.main_branch[static_cast<size_t>(i - 1)] = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error("analyze: no branch intersects all progenitor sets");
    }
    return a;
}

std::vector<Branch> main_branches(const Trs& trs, const Derivation& d) {
    return analyze(trs, d).main_branch;
}

namespace {

bool on_branch(const Branch& b, const Position& p) {
    return std::binary_search(b.begin(), b.end(), p);
}

// main progenies across one step (1-based step index i: t_i -> t_{i+1})
std::set<Position> mchild_step(const DerivationAnalysis& a, int i, const Position& p) {
    std::set<Position> out;
    if (!on_branch(a.branch(i), p)) return out;
    auto it = a.child[static_cast<size_t>(i - 1)].find(p);
    if (it == a.child[static_cast<size_t>(i - 1)].end()) return out;
    for (const Position& q : it->second)
        if (on_branch(a.branch(i + 1), q)) out.insert(q);
    return out;
}

}  // namespace

std::set<Position> main_progeny(const DerivationAnalysis& a, int from, int to,
                                const Position& p) {
    std::set<Position> cur{p};
    for (int i = from; i < to; ++i) {
        std::set<Position> next;
        for (const Position& q : cur) {
            std::set<Position> m = mchild_step(a, i, q);
            next.insert(m.begin(), m.end());
        }
        cur = std::move(next);
    }
    return cur;
}

Position main_progenitor(const DerivationAnalysis& a, int i, const Position& q) {
    if (!on_branch(a.branch(i + 1), q))
        throw NotOnMainBranch("main_progenitor: " + q.str() + " not on the main branch of t" +
                              std::to_string(i + 1));
    std::vector<Position> hits;
    auto it = a.anc[static_cast<size_t>(i - 1)].find(q);
    if (it != a.anc[static_cast<size_t>(i - 1)].end())
        for (const Position& p : it->second)
            if (on_branch(a.branch(i), p) && mchild_step(a, i, p).count(q)) hits.push_back(p);
    if (hits.size() != 1)
        throw Error("main_progenitor: expected a unique main progenitor for " + q.str() +
                    ", found " + std::to_string(hits.size()));
    return hits[0];
}

int ProgenitorGraph::node_index(const PgNode& n) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || !(*it == n)) return -1;
    return static_cast<int>(it - nodes.begin());
}

ProgenitorGraph progenitor_graph(const DerivationAnalysis& a) {
    ProgenitorGraph g;
    const Trs& trs = *a.trs;
    int n = a.term_count();
    for (int i = 1; i <= n; ++i) {
        for (const Position& p : a.branch(i)) {
            Term sub = subterm_at(a.term(i), p);
            if (is_var(sub) || !trs.is_defined(sub->sym)) continue;
            if (i == 1) {
                g.nodes.push_back(PgNode{i, p});
            } else {
                Position m = main_progenitor(a, i - 1, p);
                if (m == a.redex(i - 1)) g.nodes.push_back(PgNode{i, p});
            }
        }
    }
    std::sort(g.nodes.begin(), g.nodes.end());

    // one incoming edge per node of t_j (j >= 2): walk the main progenitor
    // chain backward until it meets a redex (or reaches t_1)
    for (const PgNode& node : g.nodes) {
        int j = node.term_index;
        if (j == 1) continue;
        Position pi = node.pos;
        PgNode source{1, Position{}};
        bool have_source = false;
        for (int k = j - 1; k >= 1; --k) {
            Position prev = main_progenitor(a, k, pi);
            if (k < j - 1 && prev == a.redex(k)) {
                source = PgNode{k + 1, pi};
                have_source = true;
                break;
            }
            pi = prev;
        }
        if (!have_source) source = PgNode{1, pi};
        int si = g.node_index(source);
        int ti = g.node_index(node);
        if (si >= 0) g.edges.emplace_back(si, ti);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string pg_to_dot(const ProgenitorGraph& g) {
    std::ostringstream out;
    out << "digraph pgraph {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
        out << "  " << i << " [label=\"t" << g.nodes[i].term_index << "@"
            << (g.nodes[i].pos.is_root() ? std::string("ε") : g.nodes[i].pos.str()) << "\"];\n";
    for (auto& [s, t] : g.edges) out << "  " << s << " -> " << t << ";\n";
    out << "}\n";
    return out.str();
}

std::string pg_to_json(const ProgenitorGraph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const PgNode& n : g.nodes) j["nodes"].push_back({n.term_index, n.pos.str()});
    j["edges"] = nlohmann::json::array();
    for (auto& [s, t] : g.edges) j["edges"].push_back({s, t});
    return j.dump(2);
}

ImplicitDpDerivation implicit_dp_derivation(const Trs& trs, const Derivation& d, int first,
                                            const std::vector<Position>& chain) {
    if (chain.empty()) throw ChainNotProgenyLinked("implicit_dp_derivation: empty chain");
    if (first < 1 || first + static_cast<int>(chain.size()) - 1 > d.term_count())
        throw ChainNotProgenyLinked("implicit_dp_derivation: chain exceeds the derivation");
    DpProblem dp = dependency_pairs(trs);

    ImplicitDpDerivation out;
    for (size_t k = 0; k < chain.size(); ++k) {
        int i = first + static_cast<int>(k);
        Term t = d.term(i);
        if (!valid_position(t, chain[k]))
            throw PositionOutOfRange("implicit_dp_derivation: position " + chain[k].str() +
                                     " not in t" + std::to_string(i));
        Term sub = subterm_at(t, chain[k]);
        if (is_var(sub) || !trs.is_defined(sub->sym))
            throw UndefinedRoot("implicit_dp_derivation: root of " + term_to_string(sub) +
                                " is not defined");
        out.terms.push_back(mark_root(sub));
    }
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        int i = first + static_cast<int>(k);
        const RewriteStep& step = d.steps[static_cast<size_t>(i - 1)];
        std::set<Position> prog = progenies_of_step(trs, step, chain[k]);
        if (!prog.count(chain[k + 1]))
            throw ChainNotProgenyLinked("implicit_dp_derivation: position " +
                                        chain[k + 1].str() + " is not a progeny of " +
                                        chain[k].str());
        Term from = out.terms[k], to = out.terms[k + 1];
        if (chain[k] == step.redex) {
            // dependency pair step at the chained position
            bool ok = false;
            for (const Rule& pair : dp.pairs) {
                auto sigma = match(pair.lhs, from);
                if (sigma && apply_subst(pair.rhs, *sigma) == to) { ok = true; break; }
            }
            if (!ok)
                throw ChainNotProgenyLinked(
                    "implicit_dp_derivation: no dependency pair instance from " +
                    term_to_string(from) + " to " + term_to_string(to));
            out.kinds.push_back(ImplicitStepKind::Dp);
            out.dpsize++;
        } else if (is_strict_prefix(chain[k], step.redex)) {
            Position inner = strip_prefix(chain[k], step.redex);
            auto inner_step = step_at(trs, from, inner, step.rule_index);
            if (!inner_step || inner_step->target != to)
                throw ChainNotProgenyLinked("implicit_dp_derivation: R step does not validate");
            out.kinds.push_back(ImplicitStepKind::R);
        } else {
            if (from != to)
                throw ChainNotProgenyLinked(
                    "implicit_dp_derivation: expected equal terms along the chain");
            out.kinds.push_back(ImplicitStepKind::Eq);
        }
    }
    return out;
}

}  // namespace dpclab
