#include "jetcoh/chart.hpp"

#include "jetcoh/error.hpp"

namespace jetcoh {

namespace {

bool transported(Family fam) {
    return fam == Family::f || fam == Family::g || fam == Family::k || fam == Family::T || fam == Family::R ||
           fam == Family::w;
}

}  // namespace

ChartFrame::ChartFrame(JetLimits limits) : limits_(limits) {}

const DiffExpr& ChartFrame::binding(JetSymbol s) const {
    if (!transported(s.family))
        throw InvalidArgument("no frame binding for " + std::string(family_name(s.family)) + "-jets");
    std::lock_guard lock(mu_);
    auto& slot = cache_[s.index()];
    if (slot) return *slot;
    const DiffExpr hinv(hinv_symbol());
    const DiffExpr h1(JetSymbol{Family::h, 1});
    DiffExpr b;
    if (s.order == 0) {
        const DiffExpr base(JetSymbol{s.family, 0});
        switch (s.family) {
        case Family::f:
        case Family::g:
        case Family::k: b = h1 * base; break;
        case Family::T: b = hinv * (base + eta()); break;
        case Family::R: b = hinv * hinv * (base + schwarzian(limits_)); break;
        case Family::w: b = hinv * base; break;
        default: break;
        }
    } else {
        // D_β = hinv D_α
        b = hinv * total_derivative(binding(JetSymbol{s.family, s.order - 1}), limits_);
    }
    slot.emplace(std::move(b));
    return *slot;
}

DiffExpr pushforward(const DiffExpr& e, const ChartFrame& frame) {
    if (e.contains(Family::h) || e.contains(Family::hinv))
        throw InvalidArgument("pushforward input already contains transition jets");
    return substitute_table(e, [&](JetSymbol s) -> std::optional<DiffExpr> { return frame.binding(s); });
}

DiffExpr weight_factor(int weight) {
    if (weight >= 0) return DiffExpr(hinv_symbol()).pow(weight);
    return DiffExpr(JetSymbol{Family::h, 1}).pow(-weight);
}

GlobalityVerdict is_global(const DiffExpr& e, int weight, const ChartFrame& frame) {
    GlobalityVerdict v;
    v.residual = pushforward(e, frame) - weight_factor(weight) * e;
    v.global = v.residual.is_zero();
    return v;
}

GlobalityVerdict is_global(const Cochain2& c, const ChartFrame& frame) {
    return is_global(c.coeff, c.value_weight, frame);
}

GlobalityVerdict is_global(const Density& a, const ChartFrame& frame) {
    return is_global(a.coeff, a.weight.as_int(), frame);
}

DiffExpr transform_connection(Family which, const ChartFrame& frame) {
    if (which != Family::T && which != Family::R) throw InvalidArgument("transform_connection expects T or R");
    return frame.binding(JetSymbol{which, 0});
}

DiffExpr covariance_defect(const Density& a, const ChartFrame& frame) {
    const Density na = covariant_derivative(a, frame.limits());
    return pushforward(na.coeff, frame) - weight_factor(na.weight.as_int()) * na.coeff;
}

}  // namespace jetcoh
