#pragma once

#include "jetcoh/calculus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcoh {

/// How vector fields act on cochain values.
enum class ActionMode {
    lie,      ///< L_X a = X a' + λ X' a
    trivial,  ///< values in the trivial module: no action terms
};

/// Antisymmetric bilinear 2-cochain on vector fields, written in the jets of
/// the two argument families f and g.
struct Cochain2 {
    DiffExpr coeff;
    int value_weight = 0;
    Coefficient module_lambda = Coefficient::lambda();

    /// Validates bilinearity (degree 1 in f and in g, no k) and antisymmetry.
    static Cochain2 make(DiffExpr coeff, int value_weight, Coefficient module_lambda);
    Cochain2 with_lambda(Coefficient lam) const;
};

/// Linear 1-cochain X -> b(X), written in the jets of f.
struct Cochain1 {
    DiffExpr coeff;
    int value_weight = 0;
    Coefficient module_lambda = Coefficient::lambda();

    static Cochain1 make(DiffExpr coeff, int value_weight, Coefficient module_lambda);
};

/// Expression f[p]g[q] - f[q]g[p].
DiffExpr det_expr(int p, int q, const JetLimits& limits = {});

/// det(p,q) as a cochain with symbolic λ and value weight p+q-2.
Cochain2 det_cochain(int p, int q, const JetLimits& limits = {});

/// c(x, y) for arbitrary vector-field coefficient expressions.
DiffExpr apply(const Cochain2& c, const DiffExpr& x, const DiffExpr& y, const JetLimits& limits = {});
DiffExpr apply(const Cochain1& b, const DiffExpr& x, const JetLimits& limits = {});

/// δc(f,g,k) = L_f c(g,k) - L_g c(f,k) + L_k c(f,g)
///            - c([f,g],k) + c([f,k],g) - c([g,k],f).
/// Zero iff c is a 2-cocycle for its module parameter.
DiffExpr ce_differential(const Cochain2& c, ActionMode mode = ActionMode::lie, const JetLimits& limits = {});

/// δb(f,g) = L_f b(g) - L_g b(f) - b([f,g]).
Cochain2 coboundary(const Cochain1& b, const JetLimits& limits = {});

bool is_cocycle(const Cochain2& c, ActionMode mode = ActionMode::lie, const JetLimits& limits = {});

/// Euler-operator test: true iff p = D(q) for some differential polynomial q
/// (p must have no constant term and no h-jets).
bool is_total_derivative(const DiffExpr& p, const JetLimits& limits = JetLimits{kJetSlots - 1});

struct LambdaSolutions {
    enum class Kind { all, none, finite };
    Kind kind = Kind::none;
    std::vector<Rational> values;
    /// Monic gcd of all λ-coefficients of δc (zero polynomial when kind == all).
    Coefficient gcd;
    /// δc with the action dropped vanishes identically.
    bool trivial_pointwise = false;
    /// δc with the action dropped is a total derivative (the integrated sense).
    std::optional<bool> trivial_integrated;

    bool contains(const Rational& lam) const;
    /// "all", "none", or "{3}".
    std::string summary() const;
};

/// Values of λ for which δc vanishes, as common rational roots of all
/// coefficients of the symbolic-λ differential.
LambdaSolutions lambda_solutions(const Cochain2& c, const JetLimits& limits = {});

}  // namespace jetcoh
