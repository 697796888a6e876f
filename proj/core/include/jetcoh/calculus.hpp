#pragma once

#include "jetcoh/diff_expr.hpp"

namespace jetcoh {

/// Weight of a density, stored doubled so that half-integer weights are exact.
class Weight {
public:
    constexpr Weight() = default;
    /// Integer weight.
    constexpr Weight(int w) : twice_(2 * w) {}  // NOLINT
    static constexpr Weight from_twice(int twice) {
        Weight r;
        r.twice_ = twice;
        return r;
    }
    constexpr int twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    /// Integer value; throws for half-integer weights.
    int as_int() const;
    Rational as_rational() const { return make_rational(twice_, 2); }
    std::string to_string() const;

    friend constexpr Weight operator+(Weight a, Weight b) noexcept { return from_twice(a.twice_ + b.twice_); }
    friend constexpr bool operator==(Weight, Weight) = default;

private:
    int twice_ = 0;
};

/// Coefficient of a λ-density a·(dz)^weight. Weight -1 is a vector field,
/// 0 a function, 1 a one-form.
struct Density {
    DiffExpr coeff;
    Weight weight;

    Density() = default;
    Density(DiffExpr c, int w) : coeff(std::move(c)), weight(w) {}
    /// Half-integer weights must be requested explicitly.
    static Density with_weight(DiffExpr c, Weight w, bool allow_half_integer = false);

    bool is_vector_field() const noexcept { return weight == Weight(-1); }
};

/// L_X a = X a' + λ X' a. Background jets inside `a` are differentiated.
Density lie_action(const Density& field, const Density& a, const Coefficient& module_lambda,
                   const JetLimits& limits = {});

/// [X, Y] = X Y' - X' Y.
Density bracket(const Density& x, const Density& y, const JetLimits& limits = {});

/// S(h) = h[3]*hinv - 3/2*h[2]^2*hinv^2.
DiffExpr schwarzian(const JetLimits& limits = {});

/// η = h''/h' = h[2]*hinv.
DiffExpr eta();

/// ∇a = a' + weight·T·a, raising the weight by one. With this sign the
/// affine connection obeys T_β h' = T_α + h''/h' and ∇ is chart-covariant.
Density covariant_derivative(const Density& a, const JetLimits& limits = {});
Density covariant_derivative(const Density& a, int times, const JetLimits& limits = {});

/// Projective connection induced by T: R = T' + T²/2.
DiffExpr induced_projective_connection(const JetLimits& limits = {});

/// Product of densities: coefficients multiply, weights add.
Density density_product(const Density& a, const Density& b);

/// X∇a + weight(a)·(∇X)·a; agrees identically with lie_action at λ = weight(a).
Density action_via_nabla(const Density& field, const Density& a, const JetLimits& limits = {});

}  // namespace jetcoh
