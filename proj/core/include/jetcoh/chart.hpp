#pragma once

#include "jetcoh/cochain.hpp"

#include <array>
#include <mutex>
#include <optional>

namespace jetcoh {

/// Formal transition z_β = h(z_α) with free h-jets. Holds the β-frame jets of
/// every family as α-frame expressions, built lazily and cached.
class ChartFrame {
public:
    explicit ChartFrame(JetLimits limits = {});
    ChartFrame(const ChartFrame&) = delete;
    ChartFrame& operator=(const ChartFrame&) = delete;

    /// β-frame jet `s` written in α-jets and h-jets. Families f, g, k, T, R, w.
    const DiffExpr& binding(JetSymbol s) const;
    const JetLimits& limits() const noexcept { return limits_; }

private:
    JetLimits limits_;
    mutable std::recursive_mutex mu_;
    mutable std::array<std::optional<DiffExpr>, kVarCount> cache_;
};

/// The β-frame version of e, expanded in the α-frame.
DiffExpr pushforward(const DiffExpr& e, const ChartFrame& frame);

/// hinv^w for w >= 0, h[1]^-w for w < 0: the rescaling of a weight-w coefficient.
DiffExpr weight_factor(int weight);

struct GlobalityVerdict {
    bool global = false;
    /// pushforward(e) - weight_factor(weight) * e
    DiffExpr residual;
};

GlobalityVerdict is_global(const DiffExpr& e, int weight, const ChartFrame& frame);
GlobalityVerdict is_global(const Cochain2& c, const ChartFrame& frame);
GlobalityVerdict is_global(const Density& a, const ChartFrame& frame);

/// Order-0 β-binding of T or R.
DiffExpr transform_connection(Family which, const ChartFrame& frame);

/// pushforward(∇a) - weight_factor(weight + 1) ∇a; zero for every density.
DiffExpr covariance_defect(const Density& a, const ChartFrame& frame);

}  // namespace jetcoh
