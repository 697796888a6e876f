#pragma once

#include "jetcoh/cochain.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace jetcoh {

/// Finite Laurent polynomial Σ a_s z^s over ℚ.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants lift implicitly
    static LaurentPoly monomial(int s, const Rational& c = Rational(1));

    const std::map<int, Rational>& coeffs() const noexcept { return c_; }
    Rational operator[](int s) const;
    bool is_zero() const noexcept { return c_.empty(); }
    LaurentPoly derivative() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& k, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    /// "3*z^2 - z^-1", "0"
    std::string to_string() const;

private:
    std::map<int, Rational> c_;
};

/// a(z)(dz)^weight.
struct LaurentDensity {
    LaurentPoly coeff;
    int weight = 0;
    std::string to_string() const;
};

/// f(z)∂ with basis L_m = z^{m+1}∂.
struct WittField {
    LaurentPoly coeff;
    static WittField basis(int m);
};

/// L_f a = f a' + weight f' a.
LaurentDensity laurent_action(const WittField& fld, const LaurentDensity& a);
/// Same with the module parameter given separately from the weight label.
LaurentDensity laurent_action(const WittField& fld, const LaurentDensity& a, const Rational& lambda);
WittField witt_bracket(const WittField& x, const WittField& y);

/// c(x, y) in the flat chart of ℂ*: T = R = 0 and w = dz/z. λ must be given when
/// the coefficients of c depend on it. Throws InvalidArgument on h-jets.
LaurentDensity evaluate_cochain(const Cochain2& c, const WittField& x, const WittField& y,
                                const std::optional<Rational>& lambda = std::nullopt);
LaurentDensity evaluate_cochain(const Cochain2& c, int m, int n, const std::optional<Rational>& lambda = std::nullopt);

/// Pairing of a 1-form with a cycle of ℂ*: 0 is the loop around z = 0, 1 the
/// loop around ∞ (the negative of the first).
Rational residue_pair(const LaurentDensity& a, int cycle_index = 0);

/// Res₀ of ½(f g''' - g f''') with f = z^{m+1}, g = z^{n+1}: -(m³-m) on m+n = 0.
Rational kn_value(int m, int n);

enum class CertificateModule {
    density,  ///< values in ℱ_λ with the Lie action
    residue,  ///< trivial action on constants; c(L_m, L_n) read as a residue
};

struct Certificate {
    bool nontrivial = false;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    /// Degree shift d: c(L_m, L_n) sits in degree m+n+d.
    int degree_shift = 0;
    std::string detail;
};

/// Solves δb = c on the window |m|, |n|, |m+n| <= window for a graded 1-cochain b
/// of the same degree shift. Infeasible means c is not a coboundary. Throws
/// InvalidArgument if c is not graded on the window.
Certificate nontriviality_certificate(const Cochain2& c, const std::optional<Rational>& lambda, int window,
                                      CertificateModule module = CertificateModule::density);

/// Same, with the cochain given directly by its values (used for coboundaries
/// built from a 1-cochain and for the residue-valued cocycle).
Certificate nontriviality_certificate(
    const std::function<LaurentDensity(int, int)>& values, int weight, const std::optional<Rational>& lambda,
    int window, CertificateModule module);

}  // namespace jetcoh
