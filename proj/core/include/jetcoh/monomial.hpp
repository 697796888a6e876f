#pragma once

#include "jetcoh/jet.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

namespace jetcoh {

/// Power product of jet symbols, stored as a dense exponent vector indexed by
/// JetSymbol::index(). h[1] and hinv never both occur (h[1]*hinv rewrites to 1).
class Monomial {
public:
    Monomial() { exps_.fill(0); }
    explicit Monomial(JetSymbol s, int exponent = 1);

    int exponent(JetSymbol s) const noexcept { return exps_[s.index()]; }
    int exponent_at(int idx) const noexcept { return exps_[idx]; }
    bool is_one() const noexcept;
    int total_degree() const noexcept;
    /// Sum of exponents over all orders of one family.
    int family_degree(Family fam) const noexcept;
    /// Highest order present for the family, or -1.
    int max_order(Family fam) const noexcept;
    bool contains(Family fam) const noexcept { return max_order(fam) >= 0; }

    /// Product with cancellation of h[1]·hinv. Throws on exponent overflow.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Removes one power of s (s must be present).
    Monomial without_one(JetSymbol s) const;
    /// Multiplies by s^e with h[1]/hinv cancellation.
    Monomial times(JetSymbol s, int e = 1) const;

    /// "f[0]*g[1]^2"; "1" for the empty monomial.
    std::string to_string() const;

    /// Canonical term order: descending lexicographic on the exponent vector
    /// laid out by (family rank, order).
    friend bool canonical_before(const Monomial& a, const Monomial& b) noexcept {
        return std::memcmp(a.exps_.data(), b.exps_.data(), kVarCount) > 0;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return std::memcmp(a.exps_.data(), b.exps_.data(), kVarCount) == 0;
    }

    std::size_t hash() const noexcept;

private:
    void cancel_units() noexcept;
    std::array<std::uint8_t, kVarCount> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace jetcoh
