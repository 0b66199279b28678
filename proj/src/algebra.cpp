#include "dpclab/algebra.hpp"

namespace dpclab {

struct Expr::Node {
    enum Kind { Const, Arg, Add, Mul, Pow } kind;
    BigNat value;  // Const: the constant; Pow: the base
    int index = 0;
    std::shared_ptr<const Node> a, b;
};

Expr Expr::constant(BigNat v) {
    Expr e;
    e.node_ = std::make_shared<Node>(Node{Node::Const, std::move(v), 0, nullptr, nullptr});
    return e;
}

Expr Expr::arg(int index) {
    Expr e;
    e.node_ = std::make_shared<Node>(Node{Node::Arg, 0, index, nullptr, nullptr});
    return e;
}

Expr Expr::add(Expr a, Expr b) {
    Expr e;
    e.node_ = std::make_shared<Node>(Node{Node::Add, 0, 0, a.node_, b.node_});
    return e;
}

Expr Expr::mul(Expr a, Expr b) {
    Expr e;
    e.node_ = std::make_shared<Node>(Node{Node::Mul, 0, 0, a.node_, b.node_});
    return e;
}

Expr Expr::pow(BigNat base, Expr exponent) {
    if (base < 1) throw NonAffine("exponentiation base must be a positive constant");
    Expr e;
    e.node_ = std::make_shared<Node>(Node{Node::Pow, std::move(base), 0, exponent.node_, nullptr});
    return e;
}

namespace {

BigNat eval_node(const Expr::Node* n, const std::vector<BigNat>& args);

BigNat eval_node(const std::shared_ptr<const Expr::Node>& n, const std::vector<BigNat>& args) {
    return eval_node(n.get(), args);
}

BigNat eval_node(const Expr::Node* n, const std::vector<BigNat>& args) {
    switch (n->kind) {
        case Expr::Node::Const: return n->value;
        case Expr::Node::Arg:
            if (n->index < 0 || n->index >= static_cast<int>(args.size()))
                throw MissingInterpretation("expression argument index out of range");
            return args[static_cast<size_t>(n->index)];
        case Expr::Node::Add: return eval_node(n->a, args) + eval_node(n->b, args);
        case Expr::Node::Mul: return eval_node(n->a, args) * eval_node(n->b, args);
        case Expr::Node::Pow: {
            BigNat e = eval_node(n->a, args);
            if (e > 1000000) throw ArgumentTooLarge("exponent too large in algebra evaluation");
            return bignat_pow(n->value, e.convert_to<unsigned long long>());
        }
    }
    throw Error("unreachable");
}

bool affine_node(const Expr::Node* n) {
    switch (n->kind) {
        case Expr::Node::Const:
        case Expr::Node::Arg: return true;
        case Expr::Node::Add: return affine_node(n->a.get()) && affine_node(n->b.get());
        case Expr::Node::Mul: {
            bool a_const = n->a->kind == Expr::Node::Const;
            bool b_const = n->b->kind == Expr::Node::Const;
            return (a_const && affine_node(n->b.get())) || (b_const && affine_node(n->a.get()));
        }
        case Expr::Node::Pow: return false;
    }
    return false;
}

void affine_rec(const Expr::Node* n, int arity, std::vector<BigNat>& coeffs, BigNat& constant,
                const BigNat& scale) {
    switch (n->kind) {
        case Expr::Node::Const: constant += scale * n->value; return;
        case Expr::Node::Arg:
            if (n->index < 0 || n->index >= arity)
                throw NonAffine("argument index out of range in affine form");
            coeffs[static_cast<size_t>(n->index)] += scale;
            return;
        case Expr::Node::Add:
            affine_rec(n->a.get(), arity, coeffs, constant, scale);
            affine_rec(n->b.get(), arity, coeffs, constant, scale);
            return;
        case Expr::Node::Mul: {
            const Expr::Node* c = n->a->kind == Expr::Node::Const ? n->a.get() : n->b.get();
            const Expr::Node* other = c == n->a.get() ? n->b.get() : n->a.get();
            if (c->kind != Expr::Node::Const) throw NonAffine("product of two non-constants");
            affine_rec(other, arity, coeffs, constant, scale * c->value);
            return;
        }
        case Expr::Node::Pow: throw NonAffine("exponentiation is not affine");
    }
}

}  // namespace

BigNat Expr::eval(const std::vector<BigNat>& args) const { return eval_node(node_.get(), args); }

bool Expr::is_affine() const { return affine_node(node_.get()); }

void Expr::affine_form(int arity, std::vector<BigNat>& coeffs, BigNat& constant) const {
    coeffs.assign(static_cast<size_t>(arity), 0);
    constant = 0;
    affine_rec(node_.get(), arity, coeffs, constant, 1);
}

namespace {
std::string node_str(const Expr::Node* n) {
    switch (n->kind) {
        case Expr::Node::Const: return n->value.str();
        case Expr::Node::Arg: return "x" + std::to_string(n->index + 1);
        case Expr::Node::Add: return "(" + node_str(n->a.get()) + " + " + node_str(n->b.get()) + ")";
        case Expr::Node::Mul: return "(" + node_str(n->a.get()) + "*" + node_str(n->b.get()) + ")";
        case Expr::Node::Pow: return n->value.str() + "^(" + node_str(n->a.get()) + ")";
    }
    return "?";
}
}  // namespace

std::string Expr::str() const { return node_str(node_.get()); }

bool Interpretation::covers(Term t) const {
    if (is_var(t)) return true;
    if (!fns.count(symbol_name(t->sym))) return false;
    for (Term a : t->args)
        if (!covers(a)) return false;
    return true;
}

BigNat Interpretation::eval_term(Term t, const std::map<Sym, BigNat>& env) const {
    if (is_var(t)) {
        auto it = env.find(t->sym);
        if (it == env.end())
            throw MissingInterpretation("no value for variable " + symbol_name(t->sym));
        return it->second;
    }
    auto it = fns.find(symbol_name(t->sym));
    if (it == fns.end())
        throw MissingInterpretation("no interpretation for symbol '" + symbol_name(t->sym) + "'");
    std::vector<BigNat> args;
    args.reserve(t->args.size());
    for (Term a : t->args) args.push_back(eval_term(a, env));
    return it->second.eval(args);
}

void Interpretation::term_affine(Term t, const std::vector<Sym>& vars, std::vector<BigNat>& coeffs,
                                 BigNat& constant) const {
    coeffs.assign(vars.size(), 0);
    constant = 0;
    if (is_var(t)) {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == t->sym) {
                coeffs[i] = 1;
                return;
            }
        throw MissingInterpretation("variable not in scope for affine form");
    }
    auto it = fns.find(symbol_name(t->sym));
    if (it == fns.end())
        throw MissingInterpretation("no interpretation for symbol '" + symbol_name(t->sym) + "'");
    int arity = static_cast<int>(t->args.size());
    std::vector<BigNat> fc;
    BigNat f0;
    it->second.affine_form(arity, fc, f0);
    constant = f0;
    for (int i = 0; i < arity; ++i) {
        std::vector<BigNat> child_c;
        BigNat child_0;
        term_affine(t->args[static_cast<size_t>(i)], vars, child_c, child_0);
        for (size_t v = 0; v < vars.size(); ++v)
            coeffs[v] += fc[static_cast<size_t>(i)] * child_c[v];
        constant += fc[static_cast<size_t>(i)] * child_0;
    }
}

}  // namespace dpclab
