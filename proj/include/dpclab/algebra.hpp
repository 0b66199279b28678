#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dpclab/bignat.hpp"
#include "dpclab/term.hpp"
#include "dpclab/trs.hpp"

namespace dpclab {

// Arithmetic expressions over natural-number arguments: constants, argument
// projections, +, ·, and exponentiation with a constant base.
class Expr {
  public:
    static Expr constant(BigNat v);
    static Expr arg(int index);  // 0-based argument of the interpreted symbol
    static Expr add(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr pow(BigNat base, Expr exponent);

    BigNat eval(const std::vector<BigNat>& args) const;
    bool is_affine() const;
    // coefficients per argument plus constant; throws NonAffine
    void affine_form(int arity, std::vector<BigNat>& coeffs, BigNat& constant) const;
    std::string str() const;

    // convenience builders
    Expr operator+(const Expr& o) const { return add(*this, o); }
    Expr operator*(const Expr& o) const { return mul(*this, o); }

    struct Node;

  private:
    std::shared_ptr<const Node> node_;
};

// Interpretation of function symbols into expressions over naturals. The
// strictness of each orientation is chosen per check.
struct Interpretation {
    std::map<std::string, Expr> fns;

    bool covers(Term t) const;
    // evaluates a term under an assignment of its variables
    BigNat eval_term(Term t, const std::map<Sym, BigNat>& env) const;
    // affine form of the interpreted term over the given variable order
    void term_affine(Term t, const std::vector<Sym>& vars, std::vector<BigNat>& coeffs,
                     BigNat& constant) const;
};

}  // namespace dpclab
