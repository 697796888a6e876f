#pragma once

#include "jetcoh/coefficient.hpp"
#include "jetcoh/monomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace jetcoh {

struct Term {
    Monomial mono;
    Coefficient coeff;
};

/// Differential polynomial in jet symbols with coefficients in ℚ[λ], always in
/// canonical form: terms sorted by canonical_before, no zero coefficients, no
/// monomial containing both h[1] and hinv. Equal expressions compare equal.
class DiffExpr {
public:
    DiffExpr() = default;
    DiffExpr(const Rational& c);        // NOLINT: constants lift implicitly
    DiffExpr(long c) : DiffExpr(Rational(c)) {}  // NOLINT
    DiffExpr(const Coefficient& c);     // NOLINT
    DiffExpr(JetSymbol s);              // NOLINT
    DiffExpr(const Monomial& m, const Coefficient& c = Coefficient(1));

    /// The parameter λ as an expression.
    static DiffExpr lambda();
    /// Canonicalizes an arbitrary list of terms (merges duplicates, drops zeros).
    static DiffExpr from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True when the expression is a constant in ℚ[λ] (no jet symbols).
    bool is_constant() const noexcept;
    /// Coefficient of the given monomial (zero if absent).
    Coefficient coefficient_of(const Monomial& m) const;

    int max_order(Family fam) const noexcept;
    bool contains(Family fam) const noexcept { return max_order(fam) >= 0; }
    /// True iff every term has exactly `degree` factors from the family.
    bool homogeneous_in(Family fam, int degree) const noexcept;
    /// Highest λ-degree over all coefficients (-1 for zero).
    int lambda_degree() const noexcept;

    DiffExpr& operator+=(const DiffExpr& o);
    DiffExpr& operator-=(const DiffExpr& o);
    DiffExpr& operator*=(const DiffExpr& o) { return *this = *this * o; }
    DiffExpr operator-() const;
    friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
    friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
    friend bool operator==(const DiffExpr& a, const DiffExpr& b);

    DiffExpr scaled(const Coefficient& c) const;
    /// Integer power; negative exponents only for units (constants and
    /// monomials in h[1]/hinv). Throws InvalidArgument otherwise.
    DiffExpr pow(int exponent) const;

    /// Substitutes a rational value for λ.
    DiffExpr at_lambda(const Rational& lam) const;
    /// Coefficient of λ^i as a λ-free expression.
    DiffExpr lambda_part(int i) const;

    /// Surface syntax accepted by parse_expr.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Total derivative d/dz: u[n] -> u[n+1], hinv -> -h[2]*hinv^2, λ constant.
DiffExpr total_derivative(const DiffExpr& e, const JetLimits& limits = {});
/// n-fold total derivative.
DiffExpr total_derivative(const DiffExpr& e, int n, const JetLimits& limits = {});
/// Formal partial derivative by one jet symbol (hinv treated as independent).
DiffExpr partial(const DiffExpr& e, JetSymbol s);

/// Simultaneous substitution of whole families. Each binding gives the
/// order-0 replacement; order n is replaced by the n-th total derivative of the
/// binding. Bindings may mention any family, including the ones replaced.
/// Binding h or hinv is rejected (they carry the unit relation).
DiffExpr substitute(const DiffExpr& e, const std::map<Family, DiffExpr>& bindings,
                    const JetLimits& limits = {});

/// Substitution through an explicit per-symbol table; symbols for which the
/// table returns nullopt are kept.
using SymbolTable = std::function<std::optional<DiffExpr>(JetSymbol)>;
DiffExpr substitute_table(const DiffExpr& e, const SymbolTable& table);

/// Exact evaluation point: jet symbol values and a value for λ. Setting h[1]
/// also sets hinv to its reciprocal.
class EvalPoint {
public:
    void set(JetSymbol s, const Rational& v);
    void set_lambda(const Rational& lam) { lambda_ = lam; }
    const Rational& get(JetSymbol s) const;
    bool has(JetSymbol s) const noexcept { return assigned_[s.index()]; }
    const std::optional<Rational>& lambda() const noexcept { return lambda_; }

private:
    std::array<Rational, kVarCount> values_{};
    std::array<bool, kVarCount> assigned_{};
    std::optional<Rational> lambda_;
};

/// Exact value at a point. Throws EvaluationError for an unassigned symbol, a
/// missing λ when λ occurs, or h[1] = 0.
Rational eval_rational(const DiffExpr& e, const EvalPoint& point);

/// Generic evaluation into any commutative ring with +, *, and construction
/// from Rational. `value` maps each jet symbol to a ring element.
template <class Ring, class ValueFn>
Ring evaluate(const DiffExpr& e, ValueFn&& value, const Rational& lam) {
    Ring total(Rational(0));
    std::array<std::optional<Ring>, kVarCount> cache;
    for (const Term& t : e.terms()) {
        Ring prod(t.coeff.evaluate(lam));
        for (int idx = 0; idx < kVarCount; ++idx) {
            int ex = t.mono.exponent_at(idx);
            if (ex == 0) continue;
            if (!cache[idx]) cache[idx].emplace(value(JetSymbol::from_index(idx)));
            for (int i = 0; i < ex; ++i) prod = prod * *cache[idx];
        }
        total = total + prod;
    }
    return total;
}

}  // namespace jetcoh
