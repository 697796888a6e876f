#pragma once

#include "jetcoh/error.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace jetcoh {

/// Jet families in their canonical rank order.
enum class Family : std::uint8_t { f, g, k, T, R, w, h, hinv };

inline constexpr int kFamilyCount = 8;
/// Storage slots per family; the configurable cap can never exceed kJetSlots - 1.
inline constexpr int kJetSlots = 16;
inline constexpr int kVarCount = kFamilyCount * kJetSlots;
inline constexpr int kDefaultMaxOrder = 12;

inline constexpr std::array<Family, 3> kVectorFamilies{Family::f, Family::g, Family::k};
inline constexpr std::array<Family, 3> kBackgroundFamilies{Family::T, Family::R, Family::w};

std::string_view family_name(Family fam);
/// Single-letter family from surface syntax; hinv is not a letter family.
bool family_from_letter(char c, Family& out);

/// Runtime limit on jet orders.
struct JetLimits {
    int max_order = kDefaultMaxOrder;

    /// Throws InvalidArgument unless 1 <= n <= kJetSlots - 1.
    static JetLimits with_max_order(int n);
};

/// A derivative symbol u[n]. For family h the order is >= 1; hinv has order 0.
struct JetSymbol {
    Family family{};
    int order = 0;

    constexpr int index() const noexcept { return static_cast<int>(family) * kJetSlots + order; }
    static constexpr JetSymbol from_index(int idx) noexcept {
        return JetSymbol{static_cast<Family>(idx / kJetSlots), idx % kJetSlots};
    }
    std::string to_string() const;

    friend constexpr bool operator==(const JetSymbol&, const JetSymbol&) = default;
    friend constexpr auto operator<=>(const JetSymbol& a, const JetSymbol& b) noexcept {
        return a.index() <=> b.index();
    }
};

/// Validating constructor: checks the family/order combination and the cap.
JetSymbol jet(Family fam, int order, const JetLimits& limits = {});
inline JetSymbol hinv_symbol() { return JetSymbol{Family::hinv, 0}; }

}  // namespace jetcoh
