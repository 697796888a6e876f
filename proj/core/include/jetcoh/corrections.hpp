#pragma once

#include "jetcoh/catalogue.hpp"
#include "jetcoh/chart.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcoh {

struct CorrectionResult {
    bool feasible = false;
    /// Basic solution of the constraint system with columns ordered to prefer
    /// R-only coefficients, then higher powers of T.
    std::optional<Cochain2> representative;
    /// Dimension of the affine solution set.
    std::size_t dimension = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    /// Basis of the homogeneous solutions (global cocycles of lower symbol).
    std::vector<DiffExpr> gauge;
};

/// Corrects a flat symbol by terms (monomial in T, R and their derivatives) x
/// det(p,q) with p+q-2 < weight so that the result is global of the given
/// weight and a cocycle for the module parameter `module_lambda` (default: the
/// weight). Throws InvalidArgument if the symbol is not flat or its weight
/// differs, OrderCapExceeded if the ansatz needs jets above the cap.
CorrectionResult solve_corrections(const Cochain2& symbol, int weight,
                                   std::optional<Rational> module_lambda = std::nullopt,
                                   const JetLimits& limits = {});

struct MembershipVerdict {
    bool member = false;
    bool support_ok = false;
    bool global = false;
    bool cocycle = false;
    DiffExpr global_residual;
    DiffExpr cocycle_residual;
};

/// Whether `candidate` lies in the solution set of solve_corrections for the
/// same data, checked directly from the constraints.
MembershipVerdict correction_membership(const Cochain2& candidate, const Cochain2& symbol, int weight,
                                        const Rational& module_lambda, const ChartFrame& frame);

struct EquivalenceVerdict {
    bool pass = false;
    DiffExpr residual;
    /// Which substitution for R made the forms agree (or the last one tried).
    std::string normalization;
};

/// Expands the covariant form of `g` in T, substitutes R := T' + T^2/2 into the
/// connection form and compares. If that fails, R := -(T' + T^2/2) (the sign of
/// R used by the Γ-notation) is tried and reported.
EquivalenceVerdict covariant_equivalence(Generator g, const std::optional<Cochain2>& derived_c7 = std::nullopt,
                                         const JetLimits& limits = {});

/// Antisymmetric bilinear expression written as Σ coeff * det(p,q), e.g.
/// "det(1,2) - T[0]*det(0,2) + (R[0] + 1/2*T[0]^2)*det(0,1)". Parses back.
std::string det_form(const DiffExpr& e);

}  // namespace jetcoh
