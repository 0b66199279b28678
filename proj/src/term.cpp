#include "dpclab/term.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace dpclab {

namespace {

struct SymbolTable {
    std::mutex mu;
    std::unordered_map<std::string, Sym> ids;
    std::deque<std::string> names;

    Sym intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = ids.find(std::string(name));
        if (it != ids.end()) return it->second;
        Sym id = static_cast<Sym>(names.size());
        names.emplace_back(name);
        ids.emplace(names.back(), id);
        return id;
    }
    const std::string& name(Sym s) {
        std::lock_guard<std::mutex> lock(mu);
        return names[s];
    }
};

SymbolTable& symtab() {
    static SymbolTable t;
    return t;
}

uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct NodeKey {
    Sym sym;
    bool var;
    const std::vector<Term>* args;
    uint64_t hash;
};

uint64_t node_hash(Sym sym, bool var, const std::vector<Term>& args) {
    uint64_t h = mix(var ? 0x517cc1b727220a95ULL : 0x2545f4914f6cdd1dULL, sym);
    for (Term a : args) h = mix(h, a->hash);
    return h;
}

struct ArenaHash {
    using is_transparent = void;
    size_t operator()(const TermNode* n) const { return n->hash; }
    size_t operator()(const NodeKey& k) const { return k.hash; }
};

struct ArenaEq {
    using is_transparent = void;
    static bool eq(const TermNode* n, Sym sym, bool var, const std::vector<Term>& args) {
        if (n->sym != sym || n->var != var || n->args.size() != args.size()) return false;
        for (size_t i = 0; i < args.size(); ++i)
            if (n->args[i] != args[i]) return false;
        return true;
    }
    bool operator()(const TermNode* a, const TermNode* b) const { return a == b; }
    bool operator()(const NodeKey& k, const TermNode* n) const {
        return eq(n, k.sym, k.var, *k.args);
    }
    bool operator()(const TermNode* n, const NodeKey& k) const {
        return eq(n, k.sym, k.var, *k.args);
    }
};

struct Arena {
    std::mutex mu;
    std::deque<TermNode> nodes;
    std::unordered_set<const TermNode*, ArenaHash, ArenaEq> interned;

    Term make(Sym sym, bool var, std::vector<Term> args) {
        uint64_t h = node_hash(sym, var, args);
        std::lock_guard<std::mutex> lock(mu);
        NodeKey key{sym, var, &args, h};
        auto it = interned.find(key);
        if (it != interned.end()) return *it;
        uint32_t size = 1, depth = 0;
        for (Term a : args) {
            size += a->size;
            depth = std::max(depth, a->depth + 1);
        }
        nodes.push_back(TermNode{sym, var, size, depth, h, std::move(args)});
        const TermNode* n = &nodes.back();
        interned.insert(n);
        return n;
    }
};

Arena& arena() {
    static Arena a;
    return a;
}

}  // namespace

Sym intern_symbol(std::string_view name) { return symtab().intern(name); }
const std::string& symbol_name(Sym s) { return symtab().name(s); }

Term make_var(Sym s) { return arena().make(s, true, {}); }
Term make_var(std::string_view name) { return make_var(intern_symbol(name)); }
Term make_fun(Sym s, std::vector<Term> args) { return arena().make(s, false, std::move(args)); }
Term make_fun(std::string_view name, std::vector<Term> args) {
    return make_fun(intern_symbol(name), std::move(args));
}

std::string term_to_string(Term t) {
    std::string out;
    out += symbol_name(t->sym);
    if (!t->args.empty()) {
        out += '(';
        for (size_t i = 0; i < t->args.size(); ++i) {
            if (i) out += ',';
            out += term_to_string(t->args[i]);
        }
        out += ')';
    }
    return out;
}

std::string Position::str() const {
    std::string out;
    for (size_t i = 0; i < ix.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(ix[i]);
    }
    return out;
}

Position Position::parse(std::string_view s) {
    Position p;
    if (s.empty()) return p;
    uint32_t cur = 0;
    bool have = false;
    for (char c : s) {
        if (c == '.') {
            if (!have) throw SyntaxError("bad position: " + std::string(s));
            p.ix.push_back(cur);
            cur = 0;
            have = false;
        } else if (c >= '0' && c <= '9') {
            cur = cur * 10 + static_cast<uint32_t>(c - '0');
            have = true;
        } else {
            throw SyntaxError("bad position: " + std::string(s));
        }
    }
    if (!have) throw SyntaxError("bad position: " + std::string(s));
    p.ix.push_back(cur);
    for (uint32_t i : p.ix)
        if (i == 0) throw SyntaxError("position indices are positive: " + std::string(s));
    return p;
}

bool is_prefix(const Position& p, const Position& q) {
    if (p.ix.size() > q.ix.size()) return false;
    return std::equal(p.ix.begin(), p.ix.end(), q.ix.begin());
}

bool is_strict_prefix(const Position& p, const Position& q) {
    return p.ix.size() < q.ix.size() && is_prefix(p, q);
}

bool is_parallel(const Position& p, const Position& q) {
    return !is_prefix(p, q) && !is_prefix(q, p);
}

Position strip_prefix(const Position& p, const Position& q) {
    if (!is_prefix(p, q)) throw PositionOutOfRange("strip_prefix: not a prefix");
    return Position(std::vector<uint32_t>(q.ix.begin() + static_cast<long>(p.ix.size()), q.ix.end()));
}

namespace {
void collect_positions(Term t, Position& cur, std::vector<Position>* all,
                       std::vector<Position>* funs, std::vector<Position>* vars) {
    if (all) all->push_back(cur);
    if (t->var) {
        if (vars) vars->push_back(cur);
    } else {
        if (funs) funs->push_back(cur);
    }
    for (uint32_t i = 0; i < t->args.size(); ++i) {
        cur.ix.push_back(i + 1);
        collect_positions(t->args[i], cur, all, funs, vars);
        cur.ix.pop_back();
    }
}
}  // namespace

std::vector<Position> positions(Term t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, &out, nullptr, nullptr);
    return out;
}

std::vector<Position> fun_positions(Term t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, nullptr, &out, nullptr);
    return out;
}

std::vector<Position> var_positions(Term t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, nullptr, nullptr, &out);
    return out;
}

Term subterm_at(Term t, const Position& p) {
    Term cur = t;
    for (uint32_t i : p.ix) {
        if (i == 0 || i > cur->args.size())
            throw PositionOutOfRange("subterm_at: position " + p.str() + " not in " +
                                     term_to_string(t));
        cur = cur->args[i - 1];
    }
    return cur;
}

bool valid_position(Term t, const Position& p) {
    Term cur = t;
    for (uint32_t i : p.ix) {
        if (i == 0 || i > cur->args.size()) return false;
        cur = cur->args[i - 1];
    }
    return true;
}

namespace {
Term replace_rec(Term t, const std::vector<uint32_t>& ix, size_t k, Term u, Term whole,
                 const Position& p) {
    if (k == ix.size()) return u;
    uint32_t i = ix[k];
    if (i == 0 || i > t->args.size())
        throw PositionOutOfRange("replace_at: position " + p.str() + " not in " +
                                 term_to_string(whole));
    std::vector<Term> args = t->args;
    args[i - 1] = replace_rec(t->args[i - 1], ix, k + 1, u, whole, p);
    return make_fun(t->sym, std::move(args));
}
}  // namespace

Term replace_at(Term t, const Position& p, Term u) {
    return replace_rec(t, p.ix, 0, u, t, p);
}

Term apply_subst(Term t, const Substitution& sigma) {
    if (t->var) {
        auto it = sigma.find(t->sym);
        return it == sigma.end() ? t : it->second;
    }
    if (t->args.empty()) return t;
    std::vector<Term> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (Term a : t->args) {
        Term b = apply_subst(a, sigma);
        changed |= (b != a);
        args.push_back(b);
    }
    return changed ? make_fun(t->sym, std::move(args)) : t;
}

namespace {
bool match_rec(Term pattern, Term subject, Substitution& sigma) {
    if (pattern->var) {
        auto [it, inserted] = sigma.emplace(pattern->sym, subject);
        return inserted || it->second == subject;
    }
    if (subject->var || pattern->sym != subject->sym ||
        pattern->args.size() != subject->args.size())
        return false;
    for (size_t i = 0; i < pattern->args.size(); ++i)
        if (!match_rec(pattern->args[i], subject->args[i], sigma)) return false;
    return true;
}
}  // namespace

std::optional<Substitution> match(Term pattern, Term subject) {
    Substitution sigma;
    if (match_rec(pattern, subject, sigma)) return sigma;
    return std::nullopt;
}

bool is_ground(Term t) {
    if (t->var) return false;
    for (Term a : t->args)
        if (!is_ground(a)) return false;
    return true;
}

std::set<Sym> variables_of(Term t) {
    std::set<Sym> out;
    std::vector<Term> stack{t};
    while (!stack.empty()) {
        Term cur = stack.back();
        stack.pop_back();
        if (cur->var)
            out.insert(cur->sym);
        else
            stack.insert(stack.end(), cur->args.begin(), cur->args.end());
    }
    return out;
}

void collect_function_symbols(Term t, std::map<std::string, int>& sig) {
    if (t->var) return;
    const std::string& n = symbol_name(t->sym);
    int arity = static_cast<int>(t->args.size());
    auto it = sig.find(n);
    if (it == sig.end())
        sig.emplace(n, arity);
    else if (it->second != arity)
        throw ArityClash("symbol '" + n + "' used with arities " + std::to_string(it->second) +
                         " and " + std::to_string(arity));
    for (Term a : t->args) collect_function_symbols(a, sig);
}

bool has_subterm(Term t, Term u) {
    if (t == u) return true;
    for (Term a : t->args)
        if (has_subterm(a, u)) return true;
    return false;
}

bool has_proper_subterm(Term t, Term u) {
    for (Term a : t->args)
        if (has_subterm(a, u)) return true;
    return false;
}

namespace {
void collect_branches(Term t, Branch& chain, Position& cur, std::vector<Branch>& out) {
    chain.push_back(cur);
    if (t->args.empty()) {
        out.push_back(chain);
    } else {
        for (uint32_t i = 0; i < t->args.size(); ++i) {
            cur.ix.push_back(i + 1);
            collect_branches(t->args[i], chain, cur, out);
            cur.ix.pop_back();
        }
    }
    chain.pop_back();
}
}  // namespace

std::vector<Branch> branches_of(Term t) {
    std::vector<Branch> out;
    Branch chain;
    Position cur;
    collect_branches(t, chain, cur, out);
    return out;
}

TermMetrics term_metrics(Term t) {
    return TermMetrics{t->size, t->depth, branches_of(t)};
}

std::vector<Term> enumerate_ground_terms(const std::map<std::string, int>& signature,
                                         int max_size) {
    std::map<std::string, int> sig = signature;
    bool has_constant = false;
    for (auto& [name, arity] : sig)
        if (arity == 0) has_constant = true;
    if (!has_constant) sig.emplace("⋄", 0);

    // by_size[s] = all ground terms of size exactly s
    std::vector<std::vector<Term>> by_size(static_cast<size_t>(std::max(max_size, 0)) + 1);
    for (int s = 1; s <= max_size; ++s) {
        for (auto& [name, arity] : sig) {
            if (arity == 0) {
                if (s == 1) by_size[static_cast<size_t>(s)].push_back(make_fun(name));
                continue;
            }
            int budget = s - 1;
            if (budget < arity) continue;
            // all ways to split budget among arity argument sizes >= 1
            std::vector<Term> args(static_cast<size_t>(arity));
            std::vector<int> sizes(static_cast<size_t>(arity));
            auto rec = [&](auto&& self, int k, int remaining) -> void {
                if (k == arity) {
                    if (remaining != 0) return;
                    // expand cartesian product of by_size[sizes[...]]
                    std::vector<size_t> idx(static_cast<size_t>(arity), 0);
                    while (true) {
                        bool ok = true;
                        for (int j = 0; j < arity; ++j) {
                            auto& pool = by_size[static_cast<size_t>(sizes[static_cast<size_t>(j)])];
                            if (idx[static_cast<size_t>(j)] >= pool.size()) { ok = false; break; }
                            args[static_cast<size_t>(j)] = pool[idx[static_cast<size_t>(j)]];
                        }
                        if (ok) by_size[static_cast<size_t>(s)].push_back(make_fun(name, args));
                        int j = arity - 1;
                        for (; j >= 0; --j) {
                            idx[static_cast<size_t>(j)]++;
                            if (idx[static_cast<size_t>(j)] <
                                by_size[static_cast<size_t>(sizes[static_cast<size_t>(j)])].size())
                                break;
                            idx[static_cast<size_t>(j)] = 0;
                        }
                        if (j < 0) break;
                    }
                    return;
                }
                int slots_left = arity - k - 1;
                for (int sz = 1; sz + slots_left <= remaining; ++sz) {
                    sizes[static_cast<size_t>(k)] = sz;
                    self(self, k + 1, remaining - sz);
                }
            };
            rec(rec, 0, budget);
        }
    }
    std::vector<Term> out;
    for (int s = 1; s <= max_size; ++s)
        out.insert(out.end(), by_size[static_cast<size_t>(s)].begin(),
                   by_size[static_cast<size_t>(s)].end());
    return out;
}

}  // namespace dpclab
