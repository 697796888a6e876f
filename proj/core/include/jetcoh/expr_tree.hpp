#pragma once

#include "jetcoh/diff_expr.hpp"

#include <vector>

namespace jetcoh {

/// Raw expression tree as produced by the parser, before normalization.
struct ExprNode {
    enum class Kind { number, lambda, jet, add, sub, mul, neg, pow, schwarzian, det };

    Kind kind = Kind::number;
    Rational value;               // number literal, or the exponent of pow
    JetSymbol symbol{};           // jet
    int det_p = 0, det_q = 0;     // det(p,q)
    std::vector<ExprNode> children;

    static ExprNode number(Rational v);
    static ExprNode lam();
    static ExprNode jet(JetSymbol s);
    static ExprNode binary(Kind k, ExprNode a, ExprNode b);
    static ExprNode negate(ExprNode a);
    static ExprNode power(ExprNode base, Rational exponent);
    static ExprNode schwarzian_node();
    static ExprNode det(int p, int q);
};

/// Canonical form of a raw tree. Throws OrderCapExceeded, InvalidArgument
/// (non-integer exponent, det with p >= q).
DiffExpr normalize(const ExprNode& tree, const JetLimits& limits = {});

}  // namespace jetcoh
