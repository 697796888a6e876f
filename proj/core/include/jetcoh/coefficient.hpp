#pragma once

#include "jetcoh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcoh {

/// Univariate polynomial in the module parameter λ with exact rational
/// coefficients. Stored dense, lowest degree first, without trailing zeros.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(const Rational& c);  // NOLINT: implicit lift from ℚ
    Coefficient(long c) : Coefficient(Rational(c)) {}  // NOLINT

    /// The polynomial λ.
    static Coefficient lambda();
    static Coefficient from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of λ^i (zero beyond the degree).
    Rational operator[](std::size_t i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Value of the constant polynomial; throws if λ occurs.
    Rational constant() const;
    Rational evaluate(const Rational& lam) const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient operator-() const;
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.coeffs_ == b.coeffs_; }

    /// Monic gcd over ℚ[λ]; gcd(0, 0) = 0.
    static Coefficient gcd(const Coefficient& a, const Coefficient& b);
    /// Division with remainder; divisor must be nonzero.
    static void divmod(const Coefficient& a, const Coefficient& b, Coefficient& q, Coefficient& r);
    /// Distinct rational roots, ascending.
    std::vector<Rational> rational_roots() const;

    /// Surface syntax, e.g. "2*lam^2 - 1/3".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace jetcoh
